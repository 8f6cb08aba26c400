#include "garsidekit/fc.hpp"

#include <algorithm>
#include <optional>

#include "garsidekit/garside.hpp"
#include "garsidekit/salvetti.hpp"
#include "json.hpp"

namespace gk {
namespace fc {
namespace {

// Components under edges with a finite label (any relation at all); cross
// pairs between components are all infinite, so the group splits as a free
// product along them.
std::vector<GenSet> finiteComponents(const CoxeterGraph& g, GenSet X) {
  std::vector<GenSet> out;
  GenSet seen = 0;
  for (Gen s = 0; s < g.rank(); ++s) {
    if (!setContains(X, s) || setContains(seen, s)) continue;
    GenSet comp = 0;
    std::vector<Gen> stack{s};
    while (!stack.empty()) {
      Gen u = stack.back();
      stack.pop_back();
      if (setContains(comp, u)) continue;
      comp = setAdd(comp, u);
      for (Gen v = 0; v < g.rank(); ++v)
        if (v != u && setContains(X, v) && !setContains(comp, v) &&
            g.label(u, v) != kInf)
          stack.push_back(v);
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

bool shortlexLess(GenSet a, GenSet b) {
  std::vector<Gen> la = setToList(a), lb = setToList(b);
  if (la.size() != lb.size()) return la.size() < lb.size();
  return la < lb;
}

void checkLetters(const ArtinWord& w, GenSet X) {
  for (const Letter& l : w.letters)
    if (!setContains(X, l.gen))
      throw UsageError("letter outside the subgroup's generators");
}

struct Syllable {
  std::vector<Letter> letters;
  bool inI = true, inJ = true;
};

GenSet commitSide(const Syllable& s, const AmalgamNode& node) {
  return s.inI ? node.I : node.J;
}

std::vector<Syllable> syllabify(const ArtinWord& w, const AmalgamNode& node) {
  std::vector<Syllable> out;
  Syllable cur;
  for (const Letter& l : w.letters) {
    bool li = setContains(node.I, l.gen);
    bool lj = setContains(node.J, l.gen);
    bool ni = cur.inI && li, nj = cur.inJ && lj;
    if (!ni && !nj) {
      if (!cur.letters.empty()) out.push_back(cur);
      cur = Syllable{{l}, li, lj};
    } else {
      cur.letters.push_back(l);
      cur.inI = ni;
      cur.inJ = nj;
    }
  }
  if (!cur.letters.empty()) out.push_back(cur);
  return out;
}

ArtinWord wordOf(const CoxeterGraph& g, const std::vector<Letter>& ls) {
  ArtinWord w;
  w.ambient = &g;
  w.letters = ls;
  return w;
}

bool memberDispatch(const ArtinWord& w, GenSet ambient, GenSet K);

bool trivialDispatch(const ArtinWord& w, GenSet ambient) {
  const CoxeterGraph& g = *w.ambient;
  ArtinWord r = w.freeReduced();
  if (r.empty()) return true;
  if (isSpherical(g, ambient)) return garside::normalize(r, ambient).isIdentity();
  return wordTrivial(r, ambient);
}

// w in A_K inside ambient A_U: spherical route via support, general route via
// the retraction (w in A_K iff w is equivalent to its K-retract; both
// directions are exact).
bool memberDispatch(const ArtinWord& w, GenSet ambient, GenSet K) {
  const CoxeterGraph& g = *w.ambient;
  ArtinWord r = w.freeReduced();
  if (r.empty()) return true;
  if (K == 0) return trivialDispatch(r, ambient);
  if (isSpherical(g, ambient))
    return garside::memberStandard(garside::normalize(r, ambient), K);
  ArtinWord proj = salvetti::retractWord(r, K).word;
  return trivialDispatch(r.concat(proj.inverse()), ambient);
}

// Pinch syllables lying in A_K until none remains (a lone flexible K-word
// may survive; it is marked absorbable on both sides).
std::vector<Syllable> reduceSyllables(const CoxeterGraph& g, const AmalgamNode& node,
                                      std::vector<Syllable> syl, int* pinches,
                                      bool reverseScan = false) {
  const long long cap = g.caps().iterations;
  long long steps = 0;
  for (;;) {
    if (++steps > cap) throw CapError("syllable pinching exceeded the iteration cap");
    bool pinched = false;
    for (size_t scan = 0; scan < syl.size(); ++scan) {
      size_t i = reverseScan ? syl.size() - 1 - scan : scan;
      GenSet side = commitSide(syl[i], node);
      ArtinWord v = wordOf(g, syl[i].letters).freeReduced();
      if (!memberDispatch(v, side, node.K)) continue;
      if (pinches) ++*pinches;
      ArtinWord kw = v.empty() ? v : rewriteInto(v, side, node.K);
      if (syl.size() == 1) {
        if (kw.freeReduced().empty()) {
          syl.clear();
        } else {
          syl[0] = Syllable{kw.letters, true, true};
        }
        return syl;
      }
      if (i == 0) {
        syl[1].letters.insert(syl[1].letters.begin(), kw.letters.begin(),
                              kw.letters.end());
        syl.erase(syl.begin());
      } else if (i + 1 == syl.size()) {
        syl[i - 1].letters.insert(syl[i - 1].letters.end(), kw.letters.begin(),
                                  kw.letters.end());
        syl.erase(syl.begin() + i);
      } else {
        // neighbours share their committed side by alternation
        syl[i - 1].inI = syl[i - 1].inI && syl[i + 1].inI;
        syl[i - 1].inJ = syl[i - 1].inJ && syl[i + 1].inJ;
        syl[i - 1].letters.insert(syl[i - 1].letters.end(), kw.letters.begin(),
                                  kw.letters.end());
        syl[i - 1].letters.insert(syl[i - 1].letters.end(),
                                  syl[i + 1].letters.begin(),
                                  syl[i + 1].letters.end());
        syl.erase(syl.begin() + i, syl.begin() + i + 2);
      }
      pinched = true;
      break;
    }
    if (!pinched) return syl;
  }
}

// The infinity-pair node used by the intersection induction: I = X minus s,
// J = X minus t for the lexicographically least infinite pair, sides ordered
// ShortLex.
AmalgamNode pairNode(const CoxeterGraph& g, GenSet X) {
  auto pairs = g.infinitePairs(X);
  if (pairs.empty()) throw UsageError("no infinite pair to split along");
  auto [s, t] = pairs.front();
  AmalgamNode node;
  node.gens = X;
  node.leaf = false;
  GenSet A = X & ~setAdd(0, s);  // misses s
  GenSet B = X & ~setAdd(0, t);  // misses t
  if (shortlexLess(A, B)) {
    node.I = A;
    node.J = B;
    node.removed = {s, t};
  } else {
    node.I = B;
    node.J = A;
    node.removed = {t, s};
  }
  node.K = node.I & node.J;
  return node;
}

AmalgamNode splitNode(const CoxeterGraph& g, GenSet X) {
  auto comps = finiteComponents(g, X);
  if (comps.size() > 1) {
    GenSet I = comps[0];
    for (const GenSet c : comps)
      if (setToList(c)[0] < setToList(I)[0]) I = c;
    GenSet J = X & ~I;
    if (shortlexLess(J, I)) std::swap(I, J);
    AmalgamNode node;
    node.gens = X;
    node.I = I;
    node.J = J;
    node.K = 0;
    node.removed = {setToList(J)[0], setToList(I)[0]};
    return node;
  }
  return pairNode(g, X);
}

}  // namespace

bool isFcType(const CoxeterGraph& g, GenSet X) {
  std::vector<Gen> gens = setToList(X);
  const int n = static_cast<int>(gens.size());
  for (GenSet mask = 1; mask < (GenSet(1) << n); ++mask) {
    GenSet T = 0;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) T = setAdd(T, gens[i]);
    if (!g.infinitePairs(T).empty()) continue;
    if (!isSpherical(g, T)) return false;
  }
  return true;
}

std::unique_ptr<AmalgamNode> factorize(const CoxeterGraph& g, GenSet X) {
  if (!isFcType(g, X)) throw UsageError("graph is not of FC type");
  auto node = std::make_unique<AmalgamNode>();
  node->gens = X;
  if (g.infinitePairs(X).empty()) {
    node->leaf = true;
    return node;
  }
  *node = splitNode(g, X);
  node->left = factorize(g, node->I);
  node->right = factorize(g, node->J);
  return node;
}

namespace {

nlohmann::ordered_json nodeJson(const CoxeterGraph& g, const AmalgamNode& n) {
  auto names = [&](GenSet T) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (Gen s : setToList(T)) arr.push_back(g.name(s));
    return arr;
  };
  nlohmann::ordered_json j;
  if (n.leaf) {
    j["leaf"] = names(n.gens);
    return j;
  }
  j["I"] = names(n.I);
  j["J"] = names(n.J);
  j["K"] = names(n.K);
  j["left"] = nodeJson(g, *n.left);
  j["right"] = nodeJson(g, *n.right);
  return j;
}

}  // namespace

std::string decompositionToJson(const CoxeterGraph& g, const AmalgamNode& node) {
  return nodeJson(g, node).dump(2);
}

bool wordTrivial(const ArtinWord& w, GenSet X) {
  if (!w.ambient) throw UsageError("word without ambient graph");
  const CoxeterGraph& g = *w.ambient;
  checkLetters(w, X);
  ArtinWord r = w.freeReduced();
  if (r.empty()) return true;
  if (isSpherical(g, X)) return garside::normalize(r, X).isIdentity();
  if (!isFcType(g, X)) throw UsageError("graph is not of FC type");

  AmalgamNode node = splitNode(g, X);
  auto syl = reduceSyllables(g, node, syllabify(r, node), nullptr);
  if (syl.empty()) return true;
  if (syl.size() == 1)
    return trivialDispatch(wordOf(g, syl[0].letters), commitSide(syl[0], node));
  return false;  // reduced amalgam form of length >= 2
}

bool wordsEqual(const ArtinWord& a, const ArtinWord& b, GenSet X) {
  return wordTrivial(a.concat(b.inverse()), X);
}

int reducedSyllableCount(const ArtinWord& w, GenSet X, bool reverseScan) {
  const CoxeterGraph& g = *w.ambient;
  checkLetters(w, X);
  if (!isFcType(g, X)) throw UsageError("graph is not of FC type");
  if (g.infinitePairs(X).empty())
    return garside::normalize(w, X).isIdentity() ? 0 : 1;
  AmalgamNode node = splitNode(g, X);
  auto syl = reduceSyllables(g, node, syllabify(w.freeReduced(), node), nullptr,
                             reverseScan);
  return static_cast<int>(syl.size());
}

bool memberStandardFc(const ArtinWord& w, GenSet X, GenSet K) {
  checkLetters(w, X);
  return memberDispatch(w, X, K);
}

ArtinWord rewriteInto(const ArtinWord& w, GenSet X, GenSet K) {
  const CoxeterGraph& g = *w.ambient;
  if (isSpherical(g, X)) {
    GarsideElement e = garside::normalize(w, X);
    if (!setSubset(garside::support(e), K))
      throw UsageError("element does not lie in the target subgroup");
    return garside::toWord(e);
  }
  return salvetti::retractWord(w, K).word;
}

bool vertexEq(const CoxeterGraph& g, GenSet X, const TreeVertex& u,
              const TreeVertex& v) {
  if (u.side != v.side) return false;
  return memberDispatch(u.rep.inverse().concat(v.rep), X, u.side);
}

namespace {

TreePath geodesicAtNode(const CoxeterGraph& g, GenSet X, const AmalgamNode& node,
                        const TreeVertex& u, const TreeVertex& v) {
  if ((u.side != node.I && u.side != node.J) ||
      (v.side != node.I && v.side != node.J))
    throw UsageError("vertex side does not belong to the decomposition node");
  TreePath path;
  ArtinWord w = u.rep.inverse().concat(v.rep).freeReduced();
  auto syl = reduceSyllables(g, node, syllabify(w, node), &path.pinchCount);

  ArtinWord cur = u.rep;
  GenSet side = u.side;
  path.vertices.push_back({cur, side});
  auto cross = [&]() {
    path.edgeReps.push_back(cur);
    side = (side == node.I) ? node.J : node.I;
    path.vertices.push_back({cur, side});
  };
  for (const Syllable& s : syl) {
    bool fits = (side == node.I && s.inI) || (side == node.J && s.inJ);
    if (!fits) cross();
    cur = cur.concat(wordOf(g, s.letters)).freeReduced();
    path.vertices.back().rep = cur;
  }
  if (side != v.side) cross();
  if (!vertexEq(g, X, path.vertices.back(), v))
    throw std::logic_error("tree geodesic did not reach the target vertex");
  return path;
}

}  // namespace

TreePath geodesic(const CoxeterGraph& g, GenSet X, const TreeVertex& u,
                  const TreeVertex& v) {
  if (!isFcType(g, X)) throw UsageError("graph is not of FC type");
  if (g.infinitePairs(X).empty())
    throw UsageError("spherical ambient has no amalgam tree");
  AmalgamNode node = splitNode(g, X);
  return geodesicAtNode(g, X, node, u, v);
}

namespace {

ArtinWord zWordOf(const CoxeterGraph& g, const ParabolicPair& P) {
  if (P.base == 0) {
    ArtinWord e;
    e.ambient = &g;
    return e;
  }
  ArtinWord zb = garside::toWord(garside::centerGeneratorProduct(g, P.base));
  return P.conj.concat(zb).concat(P.conj.inverse()).freeReduced();
}

// Fast equality: exact z-comparison for spherical bases, sufficient coset
// test otherwise (used only as a shortcut).
bool pairEq(const CoxeterGraph& g, GenSet X, const ParabolicPair& P,
            const ParabolicPair& Q) {
  if (isSpherical(g, P.base) && isSpherical(g, Q.base))
    return wordsEqual(zWordOf(g, P), zWordOf(g, Q), X);
  if (P.base != Q.base) return false;
  return memberDispatch(P.conj.inverse().concat(Q.conj).freeReduced(), X, P.base);
}

bool pairMember(const CoxeterGraph& g, GenSet X, const ArtinWord& w,
                const ParabolicPair& P) {
  return memberDispatch(P.conj.inverse().concat(w).concat(P.conj).freeReduced(), X,
                        P.base);
}

// Re-express P as a (word over U) with a base inside U, verified through the
// center element. The base may move: A_Z conjugates into A_{Z'} for another
// subset, so candidates pair a conjugator guess with every compatible base.
// Returns nullopt when the bounded attempts fail.
std::optional<ParabolicPair> rebaseTo(const CoxeterGraph& g, GenSet X,
                                      const ParabolicPair& P, const ArtinWord& a,
                                      GenSet U, int searchLen) {
  ArtinWord inner = a.inverse().concat(P.conj).freeReduced();
  const int dim = std::popcount(P.base);
  std::vector<GenSet> bases;
  if (setSubset(P.base, U)) bases.push_back(P.base);  // try the own base first
  {
    std::vector<Gen> gens = setToList(U);
    const int n = static_cast<int>(gens.size());
    for (GenSet mask = 0; mask < (GenSet(1) << n); ++mask) {
      if (std::popcount(mask) != dim) continue;
      GenSet Z = 0;
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) Z = setAdd(Z, gens[i]);
      if (Z != P.base && isSpherical(g, Z)) bases.push_back(Z);
    }
  }
  ArtinWord zP = zWordOf(g, P);
  auto attempt = [&](const ArtinWord& gamma) -> std::optional<ParabolicPair> {
    for (const Letter& l : gamma.letters)
      if (!setContains(U, l.gen)) return std::nullopt;
    for (GenSet Z : bases) {
      ParabolicPair cand{a.concat(gamma).freeReduced(), Z};
      if (wordsEqual(zP, zWordOf(g, cand), X)) return cand;
    }
    return std::nullopt;
  };
  if (auto r = attempt(salvetti::retractWord(inner, U).word)) return r;
  // theta-corrected transport, following the restandardisation recipe with a
  // trivial Coxeter move.
  CoxeterElement th = cox::theta(inner);
  auto [h0, h1] = cox::cosetSplit(th, U);
  if (h1.isIdentity()) {
    ArtinWord ig = cox::iota(th);
    ArtinWord beta1 = inner.concat(ig.inverse()).freeReduced();
    ArtinWord candGamma =
        salvetti::retractWord(beta1, U).word.concat(ig).freeReduced();
    if (auto r = attempt(candGamma)) return r;
  }
  // bounded search over short U-words
  std::vector<Gen> gens = setToList(U);
  std::vector<ArtinWord> frontier;
  ArtinWord empty;
  empty.ambient = &g;
  frontier.push_back(empty);
  for (int depth = 0; depth < searchLen; ++depth) {
    std::vector<ArtinWord> next;
    for (const ArtinWord& w : frontier) {
      for (Gen s : gens) {
        for (int sign : {+1, -1}) {
          ArtinWord e = w;
          e.letters.push_back({s, sign});
          e = e.freeReduced();
          if (auto r = attempt(e)) return r;
          next.push_back(std::move(e));
        }
      }
    }
    frontier = std::move(next);
    if (frontier.size() > 4096) break;
  }
  return std::nullopt;
}

CertMode combine(CertMode a, CertMode b) {
  if (a == CertMode::Undecided || b == CertMode::Undecided)
    return CertMode::Undecided;
  if (a == CertMode::Ball || b == CertMode::Ball) return CertMode::Ball;
  return CertMode::Exact;
}

IntersectResult intersectCore(const CoxeterGraph& g, GenSet X,
                              const ParabolicPair& P, const ParabolicPair& Q,
                              int ballRadius) {
  ArtinWord emptyW;
  emptyW.ambient = &g;
  auto trivialResult = [&](CertMode m) {
    return IntersectResult{ParabolicPair{emptyW, 0}, m, ballRadius};
  };
  if (P.base == 0 || Q.base == 0) return trivialResult(CertMode::Exact);
  if (pairEq(g, X, P, Q)) return IntersectResult{P, CertMode::Exact, ballRadius};

  // Spherical base case: defer to the Garside-certified intersection.
  if (isSpherical(g, X)) {
    ParabolicSubgroup Ps =
        parabolic::make(g, X, garside::normalize(P.conj, X), P.base);
    ParabolicSubgroup Qs =
        parabolic::make(g, X, garside::normalize(Q.conj, X), Q.base);
    auto res = parabolic::intersect(Ps, Qs, ballRadius);
    ParabolicPair out{garside::toWord(res.subgroup.conjugator), res.subgroup.base};
    return IntersectResult{
        out, res.certificate.exact ? CertMode::Exact : CertMode::Ball, ballRadius};
  }

  AmalgamNode node = pairNode(g, X);
  auto [s, t] = node.removed;  // s notin I, t notin J

  GenSet U0 = !setContains(P.base, s) ? node.I : node.J;
  TreeVertex u{P.conj, U0};

  const bool stInY = setContains(Q.base, s) && setContains(Q.base, t);
  if (!stInY) {
    GenSet V0 = !setContains(Q.base, s) ? node.I : node.J;
    TreeVertex v{Q.conj, V0};
    TreePath path = geodesicAtNode(g, X, node, u, v);

    ParabolicPair cur = P;
    ArtinWord vertexRep = u.rep;
    GenSet vertexSide = U0;
    CertMode mode = CertMode::Exact;

    for (size_t e = 0; e < path.edgeReps.size(); ++e) {
      // cut by the edge stabilizer, inside the current vertex's side
      ArtinWord gamma = vertexRep.inverse().concat(cur.conj).freeReduced();
      ArtinWord cLocal = vertexRep.inverse().concat(path.edgeReps[e]).freeReduced();
      auto rec = intersectCore(g, vertexSide, ParabolicPair{gamma, cur.base},
                               ParabolicPair{cLocal, node.K}, ballRadius);
      mode = combine(mode, rec.mode);
      if (rec.subgroup.base == 0) return trivialResult(mode);
      cur = ParabolicPair{vertexRep.concat(rec.subgroup.conj).freeReduced(),
                          rec.subgroup.base};
      vertexRep = path.vertices[e + 1].rep;
      vertexSide = path.vertices[e + 1].side;
      auto rb = rebaseTo(g, X, cur, vertexRep, vertexSide, std::min(ballRadius, 3));
      if (!rb) return IntersectResult{cur, CertMode::Undecided, ballRadius};
      cur = *rb;
    }

    ArtinWord gamma = vertexRep.inverse().concat(cur.conj).freeReduced();
    ArtinWord qLocal = vertexRep.inverse().concat(Q.conj).freeReduced();
    if (!memberDispatch(qLocal, X, vertexSide))
      throw std::logic_error("target vertex does not stabilize Q");
    ArtinWord qGamma = rewriteInto(qLocal, X, vertexSide);
    auto rec = intersectCore(g, vertexSide, ParabolicPair{gamma, cur.base},
                             ParabolicPair{qGamma, Q.base}, ballRadius);
    mode = combine(mode, rec.mode);
    if (rec.subgroup.base == 0) return trivialResult(mode);
    return IntersectResult{
        ParabolicPair{vertexRep.concat(rec.subgroup.conj).freeReduced(),
                      rec.subgroup.base},
        mode, ballRadius};
  }

  // {s,t} inside Q's base: cut Q at the projection of u onto Q's subtree.
  // The subtree vertices form a suffix of the geodesic toward any subtree
  // vertex; scanning from u, the first one found is the projection.
  TreeVertex targetV{Q.conj, node.I};
  TreePath path = geodesicAtNode(g, X, node, u, targetV);
  for (size_t i = 0; i < path.vertices.size(); ++i) {
    const TreeVertex& c = path.vertices[i];
    ArtinWord base = Q.conj.inverse().concat(c.rep).freeReduced();
    std::optional<ArtinWord> witness;  // q^-1 c x in A_Y with x in A_side
    std::vector<Gen> gens = setToList(c.side);
    std::vector<ArtinWord> frontier;
    ArtinWord empty;
    empty.ambient = &g;
    frontier.push_back(empty);
    const int searchLen = std::min(ballRadius, 3);
    for (int depth = 0; depth <= searchLen && !witness; ++depth) {
      std::vector<ArtinWord> next;
      for (const ArtinWord& x : frontier) {
        ArtinWord candidate = base.concat(x).freeReduced();
        if (memberDispatch(candidate, X, Q.base)) {
          witness = candidate;
          break;
        }
        if (depth < searchLen)
          for (Gen sg : gens)
            for (int sign : {+1, -1}) {
              ArtinWord ext = x;
              ext.letters.push_back({sg, sign});
              next.push_back(ext.freeReduced());
            }
      }
      frontier = std::move(next);
      if (frontier.size() > 8192) break;
    }
    if (!witness) {
      if (i + 1 == path.vertices.size())
        return IntersectResult{P, CertMode::Undecided, ballRadius};
      continue;
    }
    // A bounded witness search that failed on an earlier vertex could make
    // this cut too deep; the top-level ball certification is the guard.
    ArtinWord gPrime = rewriteInto(*witness, X, Q.base);
    ParabolicPair Qcut{Q.conj.concat(gPrime).freeReduced(), c.side & Q.base};
    return intersectCore(g, X, P, Qcut, ballRadius);
  }
  return IntersectResult{P, CertMode::Undecided, ballRadius};
}

}  // namespace

IntersectResult intersectSphericalAny(const CoxeterGraph& g, GenSet X,
                                      const ParabolicPair& P, const ParabolicPair& Q,
                                      int ballRadius) {
  if (!isFcType(g, X)) throw UsageError("graph is not of FC type");
  if (!isSpherical(g, P.base)) throw UsageError("P must have a spherical-type base");
  checkLetters(P.conj, X);
  checkLetters(Q.conj, X);
  if (!setSubset(P.base, X) || !setSubset(Q.base, X))
    throw UsageError("base outside the ambient subset");

  IntersectResult res = intersectCore(g, X, P, Q, ballRadius);

  // Ball certification: every common element found in the P-ball must lie in
  // the result; result must sit inside both inputs.
  if (res.subgroup.base != 0) {
    ArtinWord zr = zWordOf(g, res.subgroup);
    if (!pairMember(g, X, zr, P) || !pairMember(g, X, zr, Q))
      return IntersectResult{res.subgroup, CertMode::Undecided, ballRadius};
  }
  const int scanRadius = std::min(ballRadius, 3);
  std::vector<Gen> gens = setToList(P.base);
  std::vector<ArtinWord> frontier;
  ArtinWord empty;
  empty.ambient = &g;
  frontier.push_back(empty);
  for (int depth = 0; depth < scanRadius; ++depth) {
    std::vector<ArtinWord> next;
    for (const ArtinWord& w : frontier)
      for (Gen s : gens)
        for (int sign : {+1, -1}) {
          ArtinWord e = w;
          e.letters.push_back({s, sign});
          e = e.freeReduced();
          ArtinWord el = P.conj.concat(e).concat(P.conj.inverse()).freeReduced();
          if (pairMember(g, X, el, Q) && !pairMember(g, X, el, res.subgroup))
            res.mode = CertMode::Undecided;
          next.push_back(std::move(e));
        }
    frontier = std::move(next);
    if (frontier.size() > 4096) break;
  }
  return res;
}

}  // namespace fc
}  // namespace gk
