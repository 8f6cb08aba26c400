// Command-line front end; talks to the library through the C interface only.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "garsidekit/garsidekit.h"

namespace {

struct GraphHandle {
  gk_graph* g = nullptr;
  ~GraphHandle() {
    if (g) gk_graph_free(g);
  }
};

int emit(gk_status st, char* out) {
  if (out) {
    std::cout << out << std::endl;
    gk_string_free(out);
  }
  return static_cast<int>(st);
}

gk_graph* loadGraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open graph file: " << path << "\n";
    return nullptr;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  gk_graph* g = nullptr;
  char* err = nullptr;
  if (gk_graph_from_text(ss.str().c_str(), &g, &err) != GK_OK) {
    std::cerr << "bad graph file: " << (err ? err : "?") << "\n";
    gk_string_free(err);
    return nullptr;
  }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"garsidekit: Artin/Coxeter group computations"};
  app.require_subcommand(1);

  std::string graphPath, word, word2, subset, pSpec, qSpec, kind = "deligne",
                          format = "json";
  int ball = 5, radius = 1;
  bool rightForm = false, withTrace = false, deriveFlag = false, strict = false;

  auto addGraph = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graphPath, "Coxeter graph file")->required();
  };

  auto* nf = app.add_subcommand("nf", "left (or right) normal form");
  addGraph(nf);
  nf->add_option("--word", word)->required();
  nf->add_option("--subset", subset);
  nf->add_flag("--right", rightForm);

  auto* delta = app.add_subcommand("delta", "Garside element of a subset");
  addGraph(delta);
  delta->add_option("--subset", subset);

  auto* center = app.add_subcommand("center", "center generator of a subset");
  addGraph(center);
  center->add_option("--subset", subset);

  auto* closure = app.add_subcommand("closure", "parabolic closure of an element");
  addGraph(closure);
  closure->add_option("--word", word)->required();

  auto* intersect = app.add_subcommand("intersect", "intersection of two parabolics");
  addGraph(intersect);
  intersect->add_option("--p", pSpec)->required();
  intersect->add_option("--q", qSpec)->required();
  intersect->add_option("--ball", ball);
  intersect->add_flag("--strict", strict);

  auto* rest = app.add_subcommand("restandardise", "re-express P inside A_X");
  addGraph(rest);
  rest->add_option("--p", pSpec)->required();
  rest->add_option("--x", subset)->required();

  auto* retract = app.add_subcommand("retract", "word retraction onto A_X");
  addGraph(retract);
  retract->add_option("--word", word)->required();
  retract->add_option("--subset", subset)->required();
  retract->add_flag("--trace", withTrace);

  auto* member = app.add_subcommand("member", "membership in a standard subgroup");
  addGraph(member);
  member->add_option("--word", word)->required();
  member->add_option("--subset", subset)->required();
  member->add_flag("--strict", strict);

  auto* wordeq = app.add_subcommand("wordeq", "word equality through the best oracle");
  addGraph(wordeq);
  wordeq->add_option("--w1", word)->required();
  wordeq->add_option("--w2", word2)->required();
  wordeq->add_flag("--strict", strict);

  auto* fci = app.add_subcommand("fc-intersect", "FC intersection, P spherical");
  addGraph(fci);
  fci->add_option("--p", pSpec)->required();
  fci->add_option("--q", qSpec)->required();
  fci->add_option("--ball", ball);
  fci->add_flag("--strict", strict);

  auto* eui = app.add_subcommand("euclid-intersect",
                                 "intersection in the cycle presentation");
  addGraph(eui);
  eui->add_option("--p", pSpec)->required();
  eui->add_option("--q", qSpec)->required();
  eui->add_option("--ball", ball);

  auto* complex = app.add_subcommand("complex", "coset poset / complex export");
  addGraph(complex);
  complex->add_option("--kind", kind, "salvetti|deligne|artin|clique|cayley2");
  complex->add_option("--radius", radius);
  complex->add_option("--format", format, "json|dot");
  complex->add_flag("--derive", deriveFlag);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance battery");

  CLI11_PARSE(app, argc, argv);

  if (selftest->parsed()) {
    char* out = nullptr;
    gk_status st = gk_selftest(&out);
    return emit(st, out);
  }

  GraphHandle h;
  h.g = loadGraph(graphPath);
  if (!h.g) return 1;

  char* out = nullptr;
  gk_status st = GK_USAGE;
  if (nf->parsed())
    st = gk_nf(h.g, word.c_str(), subset.c_str(), rightForm, &out);
  else if (delta->parsed())
    st = gk_delta(h.g, subset.c_str(), &out);
  else if (center->parsed())
    st = gk_center(h.g, subset.c_str(), &out);
  else if (closure->parsed())
    st = gk_closure(h.g, word.c_str(), &out);
  else if (intersect->parsed())
    st = gk_intersect(h.g, pSpec.c_str(), qSpec.c_str(), ball, &out);
  else if (rest->parsed())
    st = gk_restandardise(h.g, pSpec.c_str(), subset.c_str(), &out);
  else if (retract->parsed())
    st = gk_retract(h.g, word.c_str(), subset.c_str(), withTrace, &out);
  else if (member->parsed())
    st = gk_member(h.g, word.c_str(), subset.c_str(), &out);
  else if (wordeq->parsed())
    st = gk_wordeq(h.g, word.c_str(), word2.c_str(), &out);
  else if (fci->parsed())
    st = gk_fc_intersect(h.g, pSpec.c_str(), qSpec.c_str(), ball, &out);
  else if (eui->parsed())
    st = gk_euclid_intersect(h.g, pSpec.c_str(), qSpec.c_str(), ball, &out);
  else if (complex->parsed())
    st = gk_complex(h.g, kind.c_str(), radius, format.c_str(), deriveFlag, &out);

  int code = emit(st, out);
  if (code == GK_UNDECIDED && !strict) code = 0;
  return code;
}
