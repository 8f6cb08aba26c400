#include "garsidekit/even.hpp"

#include <vector>

namespace gk {
namespace even {
namespace {

void requireEven(const CoxeterGraph& g) {
  if (!g.allLabelsEven()) throw UsageError("ambient has an odd label");
}

}  // namespace

ArtinWord rho(const ArtinWord& w, GenSet X) {
  if (!w.ambient) throw UsageError("word without ambient graph");
  requireEven(*w.ambient);
  ArtinWord out;
  out.ambient = w.ambient;
  for (const Letter& l : w.letters)
    if (setContains(X, l.gen)) out.letters.push_back(l);
  return out;
}

ReduceResult intersectReduce(const ArtinWord& f, GenSet X, const ArtinWord& g,
                             GenSet Y) {
  if (!f.ambient || f.ambient != g.ambient)
    throw UsageError("words live in different ambients");
  requireEven(*f.ambient);
  ReduceResult r;
  ArtinWord h = f.inverse().concat(g).freeReduced();
  r.x = rho(h, X).freeReduced();
  r.y = rho(h.inverse().concat(r.x), Y).freeReduced();
  r.core = X & Y;
  r.certifiedTrivial = (r.core == 0);
  return r;
}

ContainmentReport conjugateContainment(const ArtinWord& g, const ArtinWord& h,
                                       GenSet X, int radius) {
  if (!g.ambient || g.ambient != h.ambient)
    throw UsageError("words live in different ambients");
  const CoxeterGraph& graph = *g.ambient;
  requireEven(graph);
  auto wo = oracle::best(graph, graph.fullSet());

  ContainmentReport report;
  ArtinWord u = h.inverse().concat(g).freeReduced();

  // Same coset: g A_X = h A_X makes the conjugates equal outright.
  {
    ArtinWord d = u.concat(rho(u, X).inverse());
    Tri t = wo->trivial(d);
    ++report.checked;
    if (t == Tri::True) {
      report.verdict = Containment::Equal;
      report.certified = true;
      return report;
    }
    if (t == Tri::Unknown) ++report.undecided;
  }

  // Ball scan: each certified membership g w g^-1 in h A_X h^-1 supports
  // containment; one refutation kills both containments (containment either
  // way would force equality through the rho collapse).
  std::vector<Gen> gens = setToList(X);
  std::vector<ArtinWord> frontier;
  ArtinWord empty;
  empty.ambient = &graph;
  frontier.push_back(empty);
  bool refuted = false;
  for (int depth = 0; depth < radius && !refuted; ++depth) {
    std::vector<ArtinWord> next;
    for (const ArtinWord& w : frontier) {
      for (Gen s : gens) {
        for (int sign : {+1, -1}) {
          ArtinWord e = w;
          e.letters.push_back({s, sign});
          e = e.freeReduced();
          ArtinWord v = u.concat(e).concat(u.inverse()).freeReduced();
          ArtinWord d = v.concat(rho(v, X).inverse());
          Tri t = wo->trivial(d);
          ++report.checked;
          if (t == Tri::False) refuted = true;
          if (t == Tri::Unknown) ++report.undecided;
          next.push_back(std::move(e));
        }
        if (refuted) break;
      }
      if (refuted) break;
    }
    frontier = std::move(next);
  }

  if (refuted) {
    report.verdict = Containment::Incomparable;
    report.certified = true;
    return report;
  }
  if (report.undecided == 0) {
    report.verdict = Containment::Equal;
    report.certified = true;
  } else {
    report.verdict = Containment::Incomparable;
    report.certified = false;
  }
  return report;
}

}  // namespace even
}  // namespace gk
