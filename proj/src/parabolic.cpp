#include "garsidekit/parabolic.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "garsidekit/salvetti.hpp"

namespace gk {
namespace parabolic {
namespace {

std::string keyOf(const GarsideElement& e) {
  std::string k = std::to_string(e.power);
  for (int x : e.factors) {
    k += ',';
    k += std::to_string(x);
  }
  return k;
}

GarsideElement zOf(const CoxeterGraph& g, GenSet ambient,
                   const GarsideElement& conj, GenSet base) {
  if (base == 0) return garside::identity(g, ambient);
  GarsideElement zc = garside::centerGeneratorProduct(g, base);
  ArtinWord w = garside::toWord(zc);
  GarsideElement zb = garside::normalize(w, ambient);
  return garside::conjugate(zb, conj);
}

}  // namespace

ParabolicSubgroup make(const CoxeterGraph& g, GenSet ambient,
                       const GarsideElement& conj, GenSet base) {
  if (!setSubset(base, ambient)) throw UsageError("base is not a subset of the ambient");
  if (conj.graph != &g || conj.subset != ambient)
    throw UsageError("conjugator lives in a different ambient");
  ParabolicSubgroup P;
  P.graph = &g;
  P.ambient = ambient;
  P.conjugator = conj;
  P.base = base;
  P.z = zOf(g, ambient, conj, base);
  P.irreducible = g.components(base).size() == 1;
  return P;
}

ParabolicSubgroup trivial(const CoxeterGraph& g, GenSet ambient) {
  return make(g, ambient, garside::identity(g, ambient), 0);
}

ParabolicSubgroup standard(const CoxeterGraph& g, GenSet ambient, GenSet base) {
  return make(g, ambient, garside::identity(g, ambient), base);
}

bool member(const GarsideElement& el, const ParabolicSubgroup& P) {
  if (el.graph != P.graph || el.subset != P.ambient)
    throw UsageError("element lives in a different ambient");
  GarsideElement moved =
      garside::mul(garside::mul(garside::inverse(P.conjugator), el), P.conjugator);
  return garside::memberStandard(moved, P.base);
}

bool eq(const ParabolicSubgroup& P, const ParabolicSubgroup& Q) {
  return P.graph == Q.graph && P.ambient == Q.ambient && P.z == Q.z;
}

ParabolicSubgroup conjugated(const ParabolicSubgroup& P, const GarsideElement& h) {
  return make(*P.graph, P.ambient, garside::mul(h, P.conjugator), P.base);
}

ParabolicSubgroup closure(const GarsideElement& el) {
  const CoxeterGraph& g = *el.graph;
  if (el.isIdentity()) return trivial(g, el.subset);
  garside::Recurrence rec = garside::recurrent(el);
  GenSet supp = garside::support(rec.witness);
  return make(g, el.subset, garside::inverse(rec.conjugator), supp);
}

namespace {

// Elements conj * w * conj^-1 for words w over base letters, |w| <= radius.
std::vector<GarsideElement> subgroupBall(const ParabolicSubgroup& P, int radius,
                                         long long cap) {
  const CoxeterGraph& g = *P.graph;
  std::vector<GarsideElement> out;
  std::unordered_set<std::string> seen;
  std::vector<GarsideElement> frontier{garside::identity(g, P.ambient)};
  seen.insert(keyOf(frontier[0]));
  std::vector<GarsideElement> atoms;
  for (Gen s : setToList(P.base)) {
    atoms.push_back(garside::atom(g, P.ambient, s, +1));
    atoms.push_back(garside::atom(g, P.ambient, s, -1));
  }
  std::vector<GarsideElement> inner{frontier[0]};
  for (int d = 0; d < radius; ++d) {
    std::vector<GarsideElement> next;
    for (const GarsideElement& e : frontier)
      for (const GarsideElement& a : atoms) {
        GarsideElement v = garside::mul(e, a);
        if (seen.insert(keyOf(v)).second) {
          if (static_cast<long long>(seen.size()) > cap)
            throw CapError("intersection ball exceeded the cap");
          inner.push_back(v);
          next.push_back(std::move(v));
        }
      }
    frontier = std::move(next);
  }
  out.reserve(inner.size());
  for (const GarsideElement& e : inner)
    out.push_back(garside::conjugate(e, P.conjugator));
  return out;
}

// Maximality ordering on closures: larger l(Delta of base) first, ties by
// ShortLex of the base subset, then by the smaller conjugator form.
bool closureBetter(const CoxeterGraph& g, const ParabolicSubgroup& a,
                   const ParabolicSubgroup& b) {
  auto phi = [&](const ParabolicSubgroup& p) {
    if (p.base == 0) return 0;
    return garside::deltaElement(g, p.base).length();
  };
  int pa = phi(a), pb = phi(b);
  if (pa != pb) return pa > pb;
  std::vector<Gen> la = setToList(a.base), lb = setToList(b.base);
  if (la != lb) {
    if (la.size() != lb.size()) return la.size() < lb.size();
    return la < lb;
  }
  return keyOf(a.conjugator) < keyOf(b.conjugator);
}

}  // namespace

IntersectResult intersect(const ParabolicSubgroup& P, const ParabolicSubgroup& Q,
                          int ballRadius) {
  const CoxeterGraph& g = *P.graph;
  if (P.graph != Q.graph || P.ambient != Q.ambient)
    throw UsageError("parabolic subgroups live in different ambients");
  IntersectResult res;
  res.certificate.ballRadius = ballRadius;

  auto finish = [&](ParabolicSubgroup R, bool exact) {
    res.certificate.exact = exact;
    res.certificate.zInP = member(R.z, P);
    res.certificate.zInQ = member(R.z, Q);
    if (!res.certificate.zInP || !res.certificate.zInQ)
      throw std::logic_error("intersection certificate failed");
    res.subgroup = std::move(R);
    return res;
  };

  if (eq(P, Q)) return finish(P, true);
  // Standard pair: A_X cap A_Y = A_{X cap Y}.
  if (P.conjugator.isIdentity() && Q.conjugator.isIdentity())
    return finish(standard(g, P.ambient, P.base & Q.base), true);
  if (P.isTrivial() || Q.isTrivial()) return finish(trivial(g, P.ambient), true);
  // Nesting is exact: z_P in Q certifies P <= Q through closure minimality.
  if (member(P.z, Q)) return finish(P, true);
  if (member(Q.z, P)) return finish(Q, true);

  const long long cap = g.caps().ballElements;
  std::vector<GarsideElement> common;
  std::unordered_set<std::string> commonKeys;
  for (const GarsideElement& e : subgroupBall(P, ballRadius, cap))
    if (member(e, Q) && commonKeys.insert(keyOf(e)).second) common.push_back(e);
  for (const GarsideElement& e : subgroupBall(Q, ballRadius, cap))
    if (member(e, P) && commonKeys.insert(keyOf(e)).second) common.push_back(e);

  ParabolicSubgroup best = trivial(g, P.ambient);
  for (const GarsideElement& x : common) {
    if (x.isIdentity()) continue;
    ParabolicSubgroup Px = closure(x);
    if (closureBetter(g, Px, best)) best = Px;
  }

  // Escalate while some common element falls outside the candidate: boost
  // the pair through even powers of the candidate's center.
  const int maxEscalations = 16;
  for (int round = 0; round < maxEscalations; ++round) {
    bool escalated = false;
    for (const GarsideElement& x : common) {
      if (member(x, best)) continue;
      ParabolicSubgroup T = closure(x);
      bool grown = false;
      GarsideElement boost = best.isTrivial()
                                 ? garside::identity(g, P.ambient)
                                 : best.z;
      for (int m = 1; m <= 8 && !grown; ++m) {
        GarsideElement beta = T.z;
        for (int i = 0; i < 2 * m; ++i) beta = garside::mul(beta, boost);
        ParabolicSubgroup cand = closure(beta);
        if (member(T.z, cand) && (best.isTrivial() || member(best.z, cand))) {
          best = cand;
          grown = true;
        }
      }
      if (!grown) throw CapError("intersection escalation failed to converge");
      escalated = true;
      break;
    }
    if (!escalated) return finish(best, false);
  }
  throw CapError("intersection escalation exceeded its round limit");
}

std::pair<GarsideElement, GenSet> restandardise(const ParabolicSubgroup& P, GenSet X) {
  const CoxeterGraph& g = *P.graph;
  if (!setSubset(X, P.ambient)) throw UsageError("X outside the ambient");
  if (!garside::memberStandard(P.z, X))
    throw UsageError("subgroup is not contained in A_X");
  if (P.isTrivial()) return {garside::identity(g, P.ambient), 0};

  // Prefer a standard presentation when one exists.
  {
    std::vector<Gen> xs = setToList(X);
    const int nx = static_cast<int>(xs.size());
    for (GenSet mask = 0; mask < (GenSet(1) << nx); ++mask) {
      GenSet Y = 0;
      for (int i = 0; i < nx; ++i)
        if ((mask >> i) & 1) Y = setAdd(Y, xs[i]);
      if (std::popcount(Y) != std::popcount(P.base)) continue;
      if (eq(P, standard(g, P.ambient, Y)))
        return {garside::identity(g, P.ambient), Y};
    }
  }

  // Already in the required shape?
  if (setSubset(P.base, X) && garside::memberStandard(P.conjugator, X))
    return {P.conjugator, P.base};

  // Transport along the proof: g = theta(beta); find (w, Y) in W_X realizing
  // the Coxeter-level conjugation, verified at the Artin level through z;
  // then alpha = retract(beta iota(g)^-1) * iota(w)-lift of the transport.
  const GenSet Z = P.base;
  ArtinWord betaWord = garside::toWord(P.conjugator);
  CoxeterElement gcox = cox::theta(betaWord);
  ArtinWord ig = cox::iota(gcox);
  GarsideElement igEl = garside::normalize(ig, P.ambient);
  GarsideElement zTarget = zOf(g, P.ambient, igEl, Z);

  const GarsideTable& tx = garside::table(g, X);
  std::vector<Gen> xs = setToList(X);
  const int nx = static_cast<int>(xs.size());
  for (GenSet mask = 0; mask < (GenSet(1) << nx); ++mask) {
    GenSet Y = 0;
    for (int i = 0; i < nx; ++i)
      if ((mask >> i) & 1) Y = setAdd(Y, xs[i]);
    if (std::popcount(Y) != std::popcount(Z)) continue;
    for (int w = 0; w < tx.size; ++w) {
      GarsideElement alpha2 =
          garside::fromPositive(g, P.ambient, tx.canon[w]);
      if (!(zOf(g, P.ambient, alpha2, Y) == zTarget)) continue;
      // beta1 = beta * iota(g)^-1 is theta-trivial; its conjugation action on
      // A_X factors through the retraction.
      ArtinWord beta1 = betaWord.concat(ig.inverse());
      ArtinWord pi = salvetti::retractWord(beta1, X).word;
      GarsideElement alpha =
          garside::mul(garside::normalize(pi, P.ambient), alpha2);
      ParabolicSubgroup cand = make(g, P.ambient, alpha, Y);
      if (!eq(cand, P))
        throw std::logic_error("restandardisation transport failed verification");
      return {alpha, Y};
    }
  }
  throw std::logic_error("no Coxeter transport found for restandardisation");
}

}  // namespace parabolic
}  // namespace gk
