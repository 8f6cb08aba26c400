#include "garsidekit/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <unordered_set>

#include "garsidekit/classify.hpp"
#include "garsidekit/fc.hpp"
#include "garsidekit/garside.hpp"

namespace gk {
namespace oracle {
namespace {

void checkLetters(const ArtinWord& w, GenSet subset) {
  for (const Letter& l : w.letters)
    if (!setContains(subset, l.gen)) throw UsageError("letter outside the oracle's subset");
}

ArtinWord filterTo(const ArtinWord& w, GenSet T) {
  ArtinWord out;
  out.ambient = w.ambient;
  for (const Letter& l : w.letters)
    if (setContains(T, l.gen)) out.letters.push_back(l);
  return out;
}

bool allInfinite(const CoxeterGraph& g, GenSet T) {
  std::vector<Gen> gens = setToList(T);
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (g.label(gens[i], gens[j]) != kInf) return false;
  return true;
}

bool allEvenLabels(const CoxeterGraph& g, GenSet T) {
  std::vector<Gen> gens = setToList(T);
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      int m = g.label(gens[i], gens[j]);
      if (m != kInf && m % 2 != 0) return false;
    }
  return true;
}

// Signed letter sums per odd-label class of generators; the abelianization
// refutes triviality whenever a class sum is nonzero.
bool abelianizationNontrivial(const CoxeterGraph& g, GenSet subset,
                              const ArtinWord& w) {
  std::vector<int> cls(32);
  for (int i = 0; i < 32; ++i) cls[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (cls[x] != x) x = cls[x] = cls[cls[x]];
    return x;
  };
  std::vector<Gen> gens = setToList(subset);
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      int m = g.label(gens[i], gens[j]);
      if (m != kInf && m % 2 == 1) cls[find(gens[i])] = find(gens[j]);
    }
  std::map<int, long long> sums;
  for (const Letter& l : w.letters) sums[find(l.gen)] += l.sign;
  for (auto& [c, s] : sums)
    if (s != 0) return true;
  return false;
}

class SphericalOracle : public WordOracle {
 public:
  SphericalOracle(const CoxeterGraph& g, GenSet subset) : g_(g), subset_(subset) {
    garside::table(g, subset);
  }
  Tri trivial(const ArtinWord& w) const override {
    checkLetters(w, subset_);
    return garside::normalize(w, subset_).isIdentity() ? Tri::True : Tri::False;
  }
  std::string name() const override { return "spherical-garside"; }

 private:
  const CoxeterGraph& g_;
  GenSet subset_;
};

class FcOracle : public WordOracle {
 public:
  FcOracle(const CoxeterGraph& g, GenSet subset) : g_(g), subset_(subset) {
    if (!fc::isFcType(g, subset)) throw UsageError("graph is not of FC type");
  }
  Tri trivial(const ArtinWord& w) const override {
    checkLetters(w, subset_);
    return fc::wordTrivial(w, subset_) ? Tri::True : Tri::False;
  }
  std::string name() const override { return "fc-amalgam"; }

 private:
  const CoxeterGraph& g_;
  GenSet subset_;
};

class DeskOracle : public WordOracle {
 public:
  DeskOracle(const CoxeterGraph& g, GenSet subset) : g_(g), subset_(subset) {}

  Tri trivial(const ArtinWord& w) const override {
    checkLetters(w, subset_);
    return decide(subset_, w.freeReduced());
  }
  std::string name() const override { return "desk-prover"; }

 private:
  Tri decide(GenSet sub, const ArtinWord& w) const {
    ArtinWord r = w.freeReduced();
    if (r.empty()) return Tri::True;
    // Standard parabolic subgroups embed, so the word only matters inside
    // its letter support.
    GenSet supp = 0;
    for (const Letter& l : r.letters) supp = setAdd(supp, l.gen);
    if (supp != sub) return decide(supp, r);
    if (isSpherical(g_, sub))
      return garside::normalize(r, sub).isIdentity() ? Tri::True : Tri::False;
    if (allInfinite(g_, sub)) return Tri::False;  // free group, freely reduced
    if (fc::isFcType(g_, sub))
      return fc::wordTrivial(r, sub) ? Tri::True : Tri::False;
    if (abelianizationNontrivial(g_, sub, r)) return Tri::False;

    // Split along direct factors (cross labels are all 2).
    auto comps = g_.components(sub);
    if (comps.size() > 1) {
      Tri acc = Tri::True;
      for (GenSet c : comps) {
        Tri t = decide(c, filterTo(r, c));
        if (t == Tri::False) return Tri::False;
        if (t == Tri::Unknown) acc = Tri::Unknown;
      }
      return acc;
    }

    // Even ambient: the letter filters are homomorphisms, so any decidable
    // image refutes.
    if (allEvenLabels(g_, sub)) {
      std::vector<Gen> gens = setToList(sub);
      const int n = static_cast<int>(gens.size());
      for (GenSet mask = 1; mask + 1 < (GenSet(1) << n); ++mask) {
        GenSet T = 0;
        for (int i = 0; i < n; ++i)
          if ((mask >> i) & 1) T = setAdd(T, gens[i]);
        ArtinWord img = filterTo(r, T).freeReduced();
        if (img.empty()) continue;
        Tri t;
        if (isSpherical(g_, T))
          t = garside::normalize(img, T).isIdentity() ? Tri::True : Tri::False;
        else if (allInfinite(g_, T))
          t = Tri::False;
        else if (fc::isFcType(g_, T))
          t = fc::wordTrivial(img, T) ? Tri::True : Tri::False;
        else
          continue;
        if (t == Tri::False) return Tri::False;
      }
    }

    if (proveTrivialBounded(g_, r, std::min(g_.caps().iterations, 60000ll), 6) ==
        Tri::True)
      return Tri::True;
    return Tri::Unknown;
  }

  const CoxeterGraph& g_;
  GenSet subset_;
};

}  // namespace

std::unique_ptr<WordOracle> spherical(const CoxeterGraph& g, GenSet subset) {
  return std::make_unique<SphericalOracle>(g, subset);
}

std::unique_ptr<WordOracle> fcAmalgam(const CoxeterGraph& g, GenSet subset) {
  return std::make_unique<FcOracle>(g, subset);
}

std::unique_ptr<WordOracle> best(const CoxeterGraph& g, GenSet subset) {
  if (isSpherical(g, subset)) return spherical(g, subset);
  if (fc::isFcType(g, subset)) return fcAmalgam(g, subset);
  return std::make_unique<DeskOracle>(g, subset);
}

Tri proveTrivialBounded(const CoxeterGraph& g, const ArtinWord& w,
                        long long stateCap, int lengthSlack) {
  ArtinWord start = w.freeReduced();
  if (start.empty()) return Tri::True;
  const int maxLen = static_cast<int>(start.size()) + lengthSlack;

  using Enc = std::vector<int>;  // letter = 2*gen + (sign<0)
  auto encode = [](const ArtinWord& a) {
    Enc e;
    e.reserve(a.letters.size());
    for (const Letter& l : a.letters) e.push_back(2 * l.gen + (l.sign < 0 ? 1 : 0));
    return e;
  };
  auto freeReduce = [](Enc e) {
    Enc r;
    for (int x : e) {
      if (!r.empty() && (r.back() ^ 1) == x)
        r.pop_back();
      else
        r.push_back(x);
    }
    return r;
  };

  // All cyclic rotations of each relator and its inverse.
  std::vector<Enc> relators;
  for (Gen s = 0; s < g.rank(); ++s)
    for (Gen t = s + 1; t < g.rank(); ++t) {
      int m = g.label(s, t);
      if (m == kInf) continue;
      Enc rel;
      for (int i = 0; i < m; ++i) rel.push_back(2 * (i % 2 == 0 ? s : t));
      for (int i = m - 1; i >= 0; --i) rel.push_back(2 * (i % 2 == 0 ? t : s) + 1);
      for (int dir = 0; dir < 2; ++dir) {
        Enc base = rel;
        if (dir == 1) {
          std::reverse(base.begin(), base.end());
          for (int& x : base) x ^= 1;
        }
        for (size_t r = 0; r < base.size(); ++r) {
          Enc rot(base.begin() + r, base.end());
          rot.insert(rot.end(), base.begin(), base.begin() + r);
          relators.push_back(std::move(rot));
        }
      }
    }
  std::sort(relators.begin(), relators.end());
  relators.erase(std::unique(relators.begin(), relators.end()), relators.end());

  struct EncHash {
    size_t operator()(const Enc& e) const {
      std::uint64_t h = 1469598103934665603ull;
      for (int x : e) {
        h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
      }
      return static_cast<size_t>(h);
    }
  };

  // Shortest-first search: proofs through short intermediates come first.
  auto cmp = [](const Enc& a, const Enc& b) { return a.size() > b.size(); };
  std::priority_queue<Enc, std::vector<Enc>, decltype(cmp)> queue(cmp);
  std::unordered_set<Enc, EncHash> seen;
  Enc s0 = encode(start);
  queue.push(s0);
  seen.insert(s0);
  long long states = 1;

  while (!queue.empty()) {
    Enc cur = queue.top();
    queue.pop();
    if (cur.empty()) return Tri::True;
    auto push = [&](Enc&& e) {
      if (static_cast<int>(e.size()) > maxLen) return false;
      if (!seen.insert(e).second) return true;
      if (++states > stateCap) return false;
      if (e.empty()) {
        queue.push(std::move(e));
        return true;
      }
      queue.push(std::move(e));
      return true;
    };
    bool capped = false;
    for (const Enc& rel : relators) {
      for (size_t pos = 0; pos <= cur.size() && !capped; ++pos) {
        Enc e;
        e.reserve(cur.size() + rel.size());
        e.insert(e.end(), cur.begin(), cur.begin() + pos);
        e.insert(e.end(), rel.begin(), rel.end());
        e.insert(e.end(), cur.begin() + pos, cur.end());
        e = freeReduce(std::move(e));
        if (e.empty()) return Tri::True;
        if (!push(std::move(e))) capped = true;
      }
      if (capped) break;
    }
    if (capped && states > stateCap) return Tri::Unknown;
  }
  return Tri::Unknown;
}

}  // namespace oracle
}  // namespace gk
