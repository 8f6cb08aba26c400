#include "garsidekit/complexes.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "garsidekit/classify.hpp"
#include "garsidekit/fc.hpp"
#include "garsidekit/garside.hpp"
#include "garsidekit/salvetti.hpp"
#include "json.hpp"

namespace gk {
namespace complexes {

using json = nlohmann::ordered_json;

Kind kindFromName(const std::string& name) {
  if (name == "salvetti") return Kind::Salvetti;
  if (name == "deligne") return Kind::Deligne;
  if (name == "artin") return Kind::Artin;
  if (name == "clique") return Kind::Clique;
  throw UsageError("unknown complex kind: " + name);
}

std::string kindName(Kind k) {
  switch (k) {
    case Kind::Salvetti: return "salvetti";
    case Kind::Deligne: return "deligne";
    case Kind::Artin: return "artin";
    case Kind::Clique: return "clique";
  }
  return "?";
}

namespace {

// Subsets admitted as the T of a coset, per kind. Salvetti admits the empty
// set (its elements are the vertices); the coset kinds start at singletons,
// matching the worked radius-0 posets.
std::vector<GenSet> admissibleSubsets(const CoxeterGraph& g, Kind kind) {
  std::vector<GenSet> out;
  const GenSet full = g.fullSet();
  for (GenSet T = 0; T <= full; ++T) {
    if ((T & ~full) != 0) continue;
    switch (kind) {
      case Kind::Salvetti:
        if (isSpherical(g, T)) out.push_back(T);
        break;
      case Kind::Deligne:
        if (T != 0 && isSpherical(g, T)) out.push_back(T);
        break;
      case Kind::Artin:
        if (T != 0 && T != full) out.push_back(T);
        break;
      case Kind::Clique:
        if (T != 0 && g.infinitePairs(T).empty()) out.push_back(T);
        break;
    }
  }
  return out;
}

// Words over the full generator set in ShortLex order, lengths 0..radius.
std::vector<ArtinWord> shortlexBall(const CoxeterGraph& g, int radius, long long cap) {
  std::vector<ArtinWord> out;
  ArtinWord empty;
  empty.ambient = &g;
  out.push_back(empty);
  size_t levelStart = 0;
  for (int d = 0; d < radius; ++d) {
    size_t levelEnd = out.size();
    for (size_t i = levelStart; i < levelEnd; ++i) {
      for (Gen s = 0; s < g.rank(); ++s) {
        for (int sign : {+1, -1}) {
          ArtinWord w = out[i];
          w.letters.push_back({s, sign});
          if (static_cast<long long>(out.size()) > cap)
            throw CapError("coset ball exceeded the cap");
          out.push_back(std::move(w));
        }
      }
    }
    levelStart = levelEnd;
  }
  return out;
}

}  // namespace

CosetPoset cosetPosetBall(const CoxeterGraph& g, Kind kind, int radius) {
  CosetPoset poset;
  poset.kind = kind;
  poset.graph = &g;
  poset.radius = radius;
  const GenSet full = g.fullSet();

  if (kind == Kind::Salvetti) {
    // Elements (u, X): u in the W-ball, X spanning a finite subgroup.
    std::vector<CoxeterElement> ball;
    std::unordered_map<Word, int, WordHash> seen;
    std::deque<CoxeterElement> frontier;
    CoxeterElement id = cox::identity(g);
    ball.push_back(id);
    seen.emplace(id.word, 0);
    frontier.push_back(id);
    for (int d = 0; d < radius; ++d) {
      std::deque<CoxeterElement> next;
      while (!frontier.empty()) {
        CoxeterElement u = frontier.front();
        frontier.pop_front();
        for (Gen s = 0; s < g.rank(); ++s) {
          Word w = u.word;
          w.push_back(s);
          CoxeterElement v = cox::reduce(g, w);
          if (seen.emplace(v.word, static_cast<int>(ball.size())).second) {
            if (static_cast<long long>(ball.size()) > g.caps().ballElements)
              throw CapError("Coxeter ball exceeded the cap");
            ball.push_back(v);
            next.push_back(v);
          }
        }
      }
      frontier = std::move(next);
    }
    for (const CoxeterElement& u : ball)
      for (GenSet T : admissibleSubsets(g, kind))
        poset.elems.push_back(PosetElement{{}, u.word, T});

    for (size_t i = 0; i < poset.elems.size(); ++i) {
      for (size_t j = 0; j < poset.elems.size(); ++j) {
        if (i == j) continue;
        const PosetElement& a = poset.elems[i];  // candidate lower
        const PosetElement& b = poset.elems[j];
        if (!(a.subset != b.subset && setSubset(a.subset, b.subset))) continue;
        CoxeterElement u = cox::reduce(g, a.coxRep);
        CoxeterElement v = cox::reduce(g, b.coxRep);
        CoxeterElement m = cox::mul(cox::inverse(v), u);
        auto [m0, m1] = cox::cosetSplit(m, b.subset);
        if (!m1.isIdentity()) continue;  // v^-1 u must lie in W_Y
        GenSet rdesc = cox::descents(m).second;
        if ((rdesc & a.subset) != 0) continue;  // minimal in v^-1 u W_X
        poset.relation.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
    }
    return poset;
  }

  // Artin-coset kinds need a deciding word problem for dedup; at radius zero
  // only the identity coset appears and no oracle is required.
  std::function<bool(const ArtinWord&, GenSet)> inStandard;
  if (radius == 0) {
    inStandard = [](const ArtinWord& w, GenSet) { return w.freeReduced().empty(); };
  } else if (isSpherical(g, full)) {
    inStandard = [&g, full](const ArtinWord& w, GenSet T) {
      return garside::memberStandard(garside::normalize(w, full), T);
    };
  } else if (fc::isFcType(g, full)) {
    inStandard = [&g, full](const ArtinWord& w, GenSet T) {
      return fc::memberStandardFc(w, full, T);
    };
  } else {
    throw UsageError("no word-problem oracle for coset dedup on this graph");
  }

  std::vector<ArtinWord> ball = shortlexBall(g, radius, g.caps().ballElements);
  for (GenSet T : admissibleSubsets(g, kind)) {
    std::vector<int> reps;  // indices into poset.elems with this T
    for (const ArtinWord& alpha : ball) {
      bool fresh = true;
      for (int r : reps) {
        const ArtinWord& beta = poset.elems[static_cast<size_t>(r)].rep;
        if (inStandard(beta.inverse().concat(alpha), T)) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        reps.push_back(static_cast<int>(poset.elems.size()));
        poset.elems.push_back(PosetElement{alpha, {}, T});
      }
    }
  }

  for (size_t i = 0; i < poset.elems.size(); ++i)
    for (size_t j = 0; j < poset.elems.size(); ++j) {
      if (i == j) continue;
      const PosetElement& a = poset.elems[i];
      const PosetElement& b = poset.elems[j];
      if (!(a.subset != b.subset && setSubset(a.subset, b.subset))) continue;
      if (inStandard(b.rep.inverse().concat(a.rep), b.subset))
        poset.relation.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  return poset;
}

DerivedComplex derive(const CosetPoset& p) {
  const int n = static_cast<int>(p.elems.size());
  std::vector<std::vector<int>> above(n);
  for (auto [lo, hi] : p.relation) above[lo].push_back(hi);
  for (auto& v : above) std::sort(v.begin(), v.end());

  DerivedComplex out;
  std::vector<int> chain;
  std::function<void(int)> grow = [&](int last) {
    out.simplices.push_back(chain);
    for (int nxt : above[last]) {
      chain.push_back(nxt);
      grow(nxt);
      chain.pop_back();
    }
  };
  for (int v = 0; v < n; ++v) {
    chain = {v};
    grow(v);
  }
  for (const auto& s : out.simplices) {
    size_t dim = s.size() - 1;
    if (out.countsByDim.size() <= dim) out.countsByDim.resize(dim + 1, 0);
    ++out.countsByDim[dim];
  }
  return out;
}

Tri irreducibleParabolicAdjacent(const CoxeterGraph& g, const ParabolicPair& P,
                                 const ParabolicPair& Q, bool fcSphericalMode,
                                 int ballRadius) {
  const GenSet full = g.fullSet();
  if (g.components(P.base).size() != 1 || g.components(Q.base).size() != 1)
    throw UsageError("adjacency is defined for irreducible parabolic subgroups");

  auto zWord = [&](const ParabolicPair& pp) {
    ArtinWord zb = garside::toWord(garside::centerGeneratorProduct(g, pp.base));
    return pp.conj.concat(zb).concat(pp.conj.inverse()).freeReduced();
  };

  if (fcSphericalMode) {
    if (!fc::isFcType(g, full)) throw UsageError("fc-spherical mode needs an FC graph");
    if (!isSpherical(g, P.base) || !isSpherical(g, Q.base))
      throw UsageError("fc-spherical mode needs spherical bases");
    ArtinWord zp = zWord(P), zq = zWord(Q);
    ArtinWord comm = zp.concat(zq).concat(zp.inverse()).concat(zq.inverse());
    return fc::wordTrivial(comm, full) ? Tri::True : Tri::False;
  }

  if (!isSpherical(g, full)) return Tri::Unknown;

  auto mk = [&](const ParabolicPair& pp) {
    return parabolic::make(g, full, garside::normalize(pp.conj, full), pp.base);
  };
  ParabolicSubgroup Ps = mk(P), Qs = mk(Q);
  if (parabolic::member(Ps.z, Qs) || parabolic::member(Qs.z, Ps)) return Tri::True;

  // Elementwise commutation reduces to the generators.
  for (Gen x : setToList(P.base))
    for (Gen y : setToList(Q.base)) {
      GarsideElement p = garside::conjugate(garside::atom(g, full, x), Ps.conjugator);
      GarsideElement q = garside::conjugate(garside::atom(g, full, y), Qs.conjugator);
      if (!(garside::mul(p, q) == garside::mul(q, p))) return Tri::False;
    }
  auto inter = parabolic::intersect(Ps, Qs, ballRadius);
  if (inter.subgroup.isTrivial())
    return inter.certificate.exact ? Tri::True : Tri::Unknown;
  return Tri::False;
}

TwoSkeleton salvettiTwoSkeleton(const CoxeterGraph& g) {
  TwoSkeleton sk;
  for (Gen s = 0; s < g.rank(); ++s) sk.loops.push_back(s);
  for (Gen s = 0; s < g.rank(); ++s)
    for (Gen t = s + 1; t < g.rank(); ++t) {
      int m = g.label(s, t);
      if (m == kInf) continue;
      TwoSkeletonCell cell;
      cell.s = s;
      cell.t = t;
      cell.m = m;
      cell.boundary.ambient = &g;
      for (int i = 0; i < m; ++i)
        cell.boundary.letters.push_back({i % 2 == 0 ? s : t, +1});
      for (int i = m - 1; i >= 0; --i)
        cell.boundary.letters.push_back({i % 2 == 0 ? t : s, -1});
      sk.cells.push_back(std::move(cell));
    }
  return sk;
}

namespace {

std::string subsetLabel(const CoxeterGraph& g, GenSet T) {
  std::string out = "{";
  bool first = true;
  for (Gen s : setToList(T)) {
    if (!first) out += ",";
    out += g.name(s);
    first = false;
  }
  return out + "}";
}

json elemJson(const CosetPoset& p, const PosetElement& e) {
  json j;
  if (p.kind == Kind::Salvetti)
    j["w"] = p.graph->printPositive(e.coxRep);
  else
    j["rep"] = p.graph->printWord(e.rep);
  std::vector<std::string> names;
  for (Gen s : setToList(e.subset)) names.push_back(p.graph->name(s));
  j["subset"] = names;
  return j;
}

}  // namespace

std::string posetToJson(const CosetPoset& p) {
  json j;
  j["kind"] = kindName(p.kind);
  j["radius"] = p.radius;
  j["elements"] = json::array();
  for (const PosetElement& e : p.elems) j["elements"].push_back(elemJson(p, e));
  j["relation"] = json::array();
  for (auto [a, b] : p.relation) j["relation"].push_back({a, b});
  return j.dump(2);
}

std::string posetToDot(const CosetPoset& p) {
  std::string out = "graph poset {\n";
  for (size_t i = 0; i < p.elems.size(); ++i) {
    const PosetElement& e = p.elems[i];
    std::string rep = p.kind == Kind::Salvetti ? p.graph->printPositive(e.coxRep)
                                               : p.graph->printWord(e.rep);
    out += "  n" + std::to_string(i) + " [label=\"" + rep + "·A_" +
           subsetLabel(*p.graph, e.subset) + "\"];\n";
  }
  for (auto [a, b] : p.relation)
    out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

std::string derivedToJson(const CosetPoset& p, const DerivedComplex& d) {
  json j;
  j["kind"] = kindName(p.kind);
  j["vertices"] = p.elems.size();
  j["countsByDim"] = d.countsByDim;
  j["simplices"] = json::array();
  for (const auto& s : d.simplices) j["simplices"].push_back(s);
  return j.dump(2);
}

std::string twoSkeletonToJson(const CoxeterGraph& g, const TwoSkeleton& sk) {
  json j;
  j["vertex"] = "x0";
  j["loops"] = json::array();
  for (Gen s : sk.loops) j["loops"].push_back(g.name(s));
  j["cells"] = json::array();
  for (const auto& c : sk.cells) {
    json cj;
    cj["pair"] = {g.name(c.s), g.name(c.t)};
    cj["m"] = c.m;
    cj["boundary"] = g.printWord(c.boundary);
    cj["boundaryLength"] = c.boundary.letters.size();
    j["cells"].push_back(cj);
  }
  return j.dump(2);
}

}  // namespace complexes
}  // namespace gk
