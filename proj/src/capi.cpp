#include "garsidekit/garsidekit.h"

#include <cstring>
#include <string>

#include "garsidekit/complexes.hpp"
#include "garsidekit/euclid.hpp"
#include "garsidekit/even.hpp"
#include "garsidekit/fc.hpp"
#include "garsidekit/parabolic.hpp"
#include "garsidekit/salvetti.hpp"
#include "garsidekit/selftest.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;

struct gk_graph {
  std::unique_ptr<gk::CoxeterGraph> g;
};

namespace {

char* dupString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const json& j) {
  if (out) *out = dupString(j.dump(2));
}

gk_status fail(char** out, gk_status st, const std::string& msg) {
  json j;
  j["error"] = msg;
  put(out, j);
  return st;
}

template <typename Fn>
gk_status guarded(char** out, Fn&& fn) {
  try {
    return fn();
  } catch (const gk::CapError& e) {
    return fail(out, GK_CAP, e.what());
  } catch (const gk::UsageError& e) {
    return fail(out, GK_USAGE, e.what());
  } catch (const std::exception& e) {
    return fail(out, GK_ERROR, e.what());
  }
}

gk::GenSet parseSubset(const gk::CoxeterGraph& g, const char* csv) {
  if (!csv || !*csv) return g.fullSet();
  gk::GenSet X = 0;
  std::string s(csv);
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string name = s.substr(pos, comma - pos);
    while (!name.empty() && name.front() == ' ') name.erase(name.begin());
    while (!name.empty() && name.back() == ' ') name.pop_back();
    if (!name.empty()) X = gk::setAdd(X, g.genByName(name));
    pos = comma + 1;
  }
  return X;
}

gk::ParabolicPair parsePair(const gk::CoxeterGraph& g, const char* spec) {
  if (!spec) throw gk::UsageError("missing parabolic spec");
  std::string s(spec);
  size_t bar = s.find('|');
  if (bar == std::string::npos)
    throw gk::UsageError("parabolic spec must be 'conjWord|a,b,c'");
  gk::ParabolicPair p;
  p.conj = g.parseWord(s.substr(0, bar));
  std::string base = s.substr(bar + 1);
  p.base = base.empty() ? 0 : parseSubset(g, base.c_str());
  return p;
}

json subsetJson(const gk::CoxeterGraph& g, gk::GenSet X) {
  json arr = json::array();
  for (gk::Gen s : gk::setToList(X)) arr.push_back(g.name(s));
  return arr;
}

json garsideJson(const gk::CoxeterGraph& g, const gk::GarsideElement& e) {
  const gk::GarsideTable& t = gk::garside::table(g, e.subset);
  json j;
  j["word"] = g.printWord(gk::garside::toWord(e));
  j["power"] = e.power;
  json fs = json::array();
  for (int x : e.factors) fs.push_back(g.printPositive(t.canon[x]));
  j["factors"] = fs;
  auto p = gk::garside::profile(e);
  j["inf"] = p.inf;
  j["sup"] = p.sup;
  j["len"] = p.len;
  return j;
}

json pairJson(const gk::CoxeterGraph& g, const gk::ParabolicPair& p) {
  json j;
  j["conjugator"] = g.printWord(p.conj);
  j["base"] = subsetJson(g, p.base);
  return j;
}

json certJson(const gk::parabolic::IntersectCertificate& c) {
  json j;
  j["inclusionProof"] = {{"zInP", c.zInP}, {"zInQ", c.zInQ}};
  j["ballRadius"] = c.ballRadius;
  j["exact"] = c.exact;
  return j;
}

const char* triName(gk::Tri t) {
  switch (t) {
    case gk::Tri::True: return "true";
    case gk::Tri::False: return "false";
    default: return "unknown";
  }
}

}  // namespace

extern "C" {

const char* gk_version(void) { return "garsidekit 0.1.0"; }

void gk_string_free(char* s) { std::free(s); }

gk_status gk_graph_from_text(const char* text, gk_graph** out_graph, char** out_err) {
  if (out_err) *out_err = nullptr;
  if (!text || !out_graph) return GK_USAGE;
  try {
    auto h = new gk_graph{gk::CoxeterGraph::parse(text)};
    *out_graph = h;
    return GK_OK;
  } catch (const std::exception& e) {
    if (out_err) *out_err = dupString(e.what());
    return GK_USAGE;
  }
}

void gk_graph_free(gk_graph* g) { delete g; }

gk_status gk_nf(gk_graph* g, const char* word, const char* subset, int rightForm,
                char** out) {
  return guarded(out, [&]() {
    const gk::CoxeterGraph& graph = *g->g;
    gk::GenSet X = parseSubset(graph, subset);
    gk::GarsideElement e = gk::garside::normalize(graph.parseWord(word ? word : ""), X);
    json j = garsideJson(graph, e);
    if (rightForm) {
      auto rnf = gk::garside::rightNormalForm(e);
      const gk::GarsideTable& t = gk::garside::table(graph, X);
      json fs = json::array();
      for (int x : rnf.factors) fs.push_back(graph.printPositive(t.canon[x]));
      j["rightForm"] = {{"power", rnf.power}, {"factors", fs}};
    }
    j["identity"] = e.isIdentity();
    put(out, j);
    return GK_OK;
  });
}

gk_status gk_delta(gk_graph* g, const char* subset, char** out) {
  return guarded(out, [&]() {
    const gk::CoxeterGraph& graph = *g->g;
    gk::GenSet X = parseSubset(graph, subset);
    gk::CoxeterElement d = gk::garside::deltaElement(graph, X);
    json j;
    j["word"] = graph.printPositive(d.word);
    j["length"] = d.length();
    put(out, j);
    return GK_OK;
  });
}

gk_status gk_center(gk_graph* g, const char* subset, char** out) {
  return guarded(out, [&]() {
    const gk::CoxeterGraph& graph = *g->g;
    gk::GenSet X = parseSubset(graph, subset);
    auto types = gk::classifySpherical(graph, X);
    if (!types) throw gk::UsageError("subset is not of spherical type");
    gk::GarsideElement z = gk::garside::centerGeneratorProduct(graph, X);
    json j = garsideJson(graph, z);
    json ts = json::array();
    for (const auto& t : *types)
      ts.push_back({{"type", t.name},
                    {"rank", t.rank},
                    {"kDelta", t.kDelta},
                    {"support", subsetJson(graph, t.support)}});
    j["components"] = ts;
    j["equalsDeltaPower"] = z.factors.empty() ? z.power : 0;
    put(out, j);
    return GK_OK;
  });
}

gk_status gk_closure(gk_graph* g, const char* word, char** out) {
  return guarded(out, [&]() {
    const gk::CoxeterGraph& graph = *g->g;
    gk::GenSet full = graph.fullSet();
    gk::GarsideElement e = gk::garside::normalize(graph.parseWord(word ? word : ""), full);
    gk::ParabolicSubgroup P = gk::parabolic::closure(e);
    json j;
    j["conjugator"] = graph.printWord(gk::garside::toWord(P.conjugator));
    j["base"] = subsetJson(graph, P.base);
    j["z"] = graph.printWord(gk::garside::toWord(P.z));
    j["irreducible"] = P.irreducible;
    j["dimension"] = P.dimension();
    put(out, j);
    return GK_OK;
  });
}

gk_status gk_intersect(gk_graph* g, const char* p, const char* q, int ball,
                       char** out) {
  return guarded(out, [&]() {
    const gk::CoxeterGraph& graph = *g->g;
    gk::GenSet full = graph.fullSet();
    auto mk = [&](const char* spec) {
      gk::ParabolicPair pp = parsePair(graph, spec);
      return gk::parabolic::make(graph, full,
                                 gk::garside::normalize(pp.conj, full), pp.base);
    };
    auto res = gk::parabolic::intersect(mk(p), mk(q), ball);
    json j;
    j["subgroup"] = {
        {"conjugator", graph.printWord(gk::garside::toWord(res.subgroup.conjugator))},
        {"base", subsetJson(graph, res.subgroup.base)}};
    j["certificate"] = certJson(res.certificate);
    put(out, j);
    return GK_OK;
  });
}

gk_status gk_restandardise(gk_graph* g, const char* p, const char* subset,
                           char** out) {
  return guarded(out, [&]() {
    const gk::CoxeterGraph& graph = *g->g;
    gk::GenSet full = graph.fullSet();
    gk::GenSet X = parseSubset(graph, subset);
    gk::ParabolicPair pp = parsePair(graph, p);
    gk::ParabolicSubgroup P = gk::parabolic::make(
        graph, full, gk::garside::normalize(pp.conj, full), pp.base);
    auto [alpha, Y] = gk::parabolic::restandardise(P, X);
    json j;
    j["alpha"] = graph.printWord(gk::garside::toWord(alpha));
    j["base"] = subsetJson(graph, Y);
    put(out, j);
    return GK_OK;
  });
}

gk_status gk_retract(gk_graph* g, const char* word, const char* subset,
                     int withTrace, char** out) {
  return guarded(out, [&]() {
    const gk::CoxeterGraph& graph = *g->g;
    gk::GenSet X = parseSubset(graph, subset);
    auto r = gk::salvetti::retractWord(graph.parseWord(word ? word : ""), X);
    json j;
    j["word"] = graph.printWord(r.word);
    j["length"] = r.word.size();
    if (withTrace) {
      json tr = json::array();
      for (const auto& step : r.trace) {
        json s;
        gk::ArtinWord in;
        in.ambient = &graph;
        in.letters = {step.input};
        s["letter"] = graph.printWord(in);
        s["u"] = graph.printPositive(step.u.word);
        s["u0"] = graph.printPositive(step.u0.word);
        s["u1"] = graph.printPositive(step.u1.word);
        s["x"] = step.x ? json(graph.name(*step.x)) : json(nullptr);
        if (step.chi) {
          gk::ArtinWord cw;
          cw.ambient = &graph;
          cw.letters = {*step.chi};
          s["chi"] = graph.printWord(cw);
        } else {
          s["chi"] = "";
        }
        tr.push_back(s);
      }
      j["trace"] = tr;
    }
    put(out, j);
    return GK_OK;
  });
}

gk_status gk_member(gk_graph* g, const char* word, const char* subset, char** out) {
  return guarded(out, [&]() {
    const gk::CoxeterGraph& graph = *g->g;
    gk::GenSet X = parseSubset(graph, subset);
    auto wo = gk::oracle::best(graph, graph.fullSet());
    gk::Tri t = gk::salvetti::memberStandardGeneral(
        graph.parseWord(word ? word : ""), X, *wo);
    json j;
    j["member"] = triName(t);
    j["oracle"] = wo->name();
    put(out, j);
    return t == gk::Tri::Unknown ? GK_UNDECIDED : GK_OK;
  });
}

gk_status gk_wordeq(gk_graph* g, const char* w1, const char* w2, char** out) {
  return guarded(out, [&]() {
    const gk::CoxeterGraph& graph = *g->g;
    auto wo = gk::oracle::best(graph, graph.fullSet());
    gk::Tri t = wo->equal(graph.parseWord(w1 ? w1 : ""), graph.parseWord(w2 ? w2 : ""));
    json j;
    j["equal"] = triName(t);
    j["oracle"] = wo->name();
    put(out, j);
    return t == gk::Tri::Unknown ? GK_UNDECIDED : GK_OK;
  });
}

gk_status gk_fc_intersect(gk_graph* g, const char* p, const char* q, int ball,
                          char** out) {
  return guarded(out, [&]() {
    const gk::CoxeterGraph& graph = *g->g;
    gk::GenSet full = graph.fullSet();
    auto res = gk::fc::intersectSphericalAny(graph, full, parsePair(graph, p),
                                             parsePair(graph, q), ball);
    json j;
    j["subgroup"] = pairJson(graph, res.subgroup);
    auto tree = gk::fc::factorize(graph, full);
    j["decomposition"] = json::parse(gk::fc::decompositionToJson(graph, *tree));
    const char* mode = res.mode == gk::fc::CertMode::Exact ? "exact"
                       : res.mode == gk::fc::CertMode::Ball ? "ball-certified"
                                                            : "undecided-at-radius";
    j["certificate"] = {{"mode", mode}, {"ballRadius", res.ballRadius}};
    put(out, j);
    return res.mode == gk::fc::CertMode::Undecided ? GK_UNDECIDED : GK_OK;
  });
}

gk_status gk_euclid_intersect(gk_graph* g, const char* p, const char* q, int ball,
                              char** out) {
  return guarded(out, [&]() {
    const gk::CoxeterGraph& graph = *g->g;
    auto ctx = gk::euclid::makeContext(graph);
    auto res = gk::euclid::intersect(ctx, parsePair(graph, p), parsePair(graph, q),
                                     ball);
    json j;
    j["subgroup"] = pairJson(graph, res.subgroup);
    j["certificate"] = certJson(res.certificate);
    put(out, j);
    return GK_OK;
  });
}

gk_status gk_complex(gk_graph* g, const char* kind, int radius, const char* format,
                     int derive, char** out) {
  return guarded(out, [&]() {
    const gk::CoxeterGraph& graph = *g->g;
    std::string k = kind ? kind : "deligne";
    if (k == "cayley2") {
      auto sk = gk::complexes::salvettiTwoSkeleton(graph);
      if (out) *out = dupString(gk::complexes::twoSkeletonToJson(graph, sk));
      return GK_OK;
    }
    auto poset = gk::complexes::cosetPosetBall(graph, gk::complexes::kindFromName(k),
                                               radius);
    std::string fmt = format ? format : "json";
    if (fmt == "dot") {
      if (out) *out = dupString(gk::complexes::posetToDot(poset));
    } else if (derive) {
      auto dc = gk::complexes::derive(poset);
      if (out) *out = dupString(gk::complexes::derivedToJson(poset, dc));
    } else {
      if (out) *out = dupString(gk::complexes::posetToJson(poset));
    }
    return GK_OK;
  });
}

gk_status gk_selftest(char** out) {
  return guarded(out, [&]() {
    auto results = gk::selftest::runAll();
    json j;
    j["criteria"] = json::array();
    for (const auto& r : results)
      j["criteria"].push_back({{"id", r.id},
                               {"name", r.name},
                               {"pass", r.pass},
                               {"detail", r.detail}});
    bool all = gk::selftest::allPass(results);
    j["allPass"] = all;
    put(out, j);
    return all ? GK_OK : GK_ERROR;
  });
}

}  // extern "C"
