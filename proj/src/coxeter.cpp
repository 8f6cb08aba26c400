#include "garsidekit/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "memo.hpp"

namespace gk {
namespace cox {
namespace {

void checkLetters(const CoxeterGraph& g, const Word& w) {
  for (Gen s : w)
    if (s < 0 || s >= g.rank()) throw UsageError("letter outside the generator set");
}

// Index of the first adjacent equal pair, or -1.
int equalPairAt(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return static_cast<int>(i);
  return -1;
}

// All words obtained from w by one braid move (replace an alternating
// (s,t)-run of length m_{s,t} by the mirrored run).
template <typename Fn>
void forEachBraidMove(const CoxeterGraph& g, const Word& w, Fn&& fn) {
  const int n = static_cast<int>(w.size());
  for (int i = 0; i + 1 < n; ++i) {
    Gen s = w[i], t = w[i + 1];
    if (s == t) continue;
    int m = g.label(s, t);
    if (m == kInf || i + m > n) continue;
    bool alt = true;
    for (int j = 0; j < m; ++j)
      if (w[i + j] != ((j % 2 == 0) ? s : t)) {
        alt = false;
        break;
      }
    if (!alt) continue;
    Word v = w;
    for (int j = 0; j < m; ++j) v[i + j] = (j % 2 == 0) ? t : s;
    fn(std::move(v));
  }
}

// Tits' procedure: cancel s*s across the braid-move orbit until no orbit
// member contains an adjacent equal pair, then return the ShortLex-least
// member. All orbit members of a reduced word share its length, so ShortLex
// reduces to plain lexicographic comparison.
Word canonicalUncached(const CoxeterGraph& g, Word w) {
  const long long cap = g.caps().orbitMembers;
  for (;;) {
    if (int i = equalPairAt(w); i >= 0) {
      w.erase(w.begin() + i, w.begin() + i + 2);
      continue;
    }
    std::unordered_set<Word, WordHash> seen;
    std::deque<Word> queue;
    seen.insert(w);
    queue.push_back(w);
    Word best = w;
    bool shortened = false;
    while (!queue.empty() && !shortened) {
      Word u = queue.front();
      queue.pop_front();
      forEachBraidMove(g, u, [&](Word v) {
        if (shortened || seen.count(v)) return;
        if (int i = equalPairAt(v); i >= 0) {
          v.erase(v.begin() + i, v.begin() + i + 2);
          w = std::move(v);
          shortened = true;
          return;
        }
        if (v < best) best = v;
        if (static_cast<long long>(seen.size()) >= cap)
          throw CapError("rewriting orbit exceeded GARSIDEKIT_CAP");
        seen.insert(v);
        queue.push_back(std::move(v));
      });
    }
    if (!shortened) return best;
  }
}

Word canonical(const CoxeterGraph& g, const Word& w) {
  checkLetters(g, w);
  auto& memo = g.memo();
  {
    std::lock_guard<std::mutex> lock(memo.mtx);
    auto it = memo.canonical.find(w);
    if (it != memo.canonical.end()) return it->second;
  }
  Word result = canonicalUncached(g, w);
  {
    std::lock_guard<std::mutex> lock(memo.mtx);
    if (memo.canonical.size() < CoxeterGraph::Memo::kCanonicalCacheLimit) {
      memo.canonical.emplace(w, result);
      memo.canonical.emplace(result, result);
    }
  }
  return result;
}

void checkAmbient(const CoxeterElement& u, const CoxeterElement& v) {
  if (u.ambient != v.ambient) throw UsageError("ambient graph mismatch");
}

}  // namespace

CoxeterElement reduce(const CoxeterGraph& g, const Word& w) {
  return CoxeterElement{canonical(g, w), &g};
}

CoxeterElement identity(const CoxeterGraph& g) { return CoxeterElement{{}, &g}; }

CoxeterElement mul(const CoxeterElement& u, const CoxeterElement& v) {
  checkAmbient(u, v);
  Word w = u.word;
  w.insert(w.end(), v.word.begin(), v.word.end());
  return reduce(*u.ambient, w);
}

CoxeterElement inverse(const CoxeterElement& u) {
  Word w(u.word.rbegin(), u.word.rend());
  return reduce(*u.ambient, w);
}

bool eq(const CoxeterElement& u, const CoxeterElement& v) {
  checkAmbient(u, v);
  return u.word == v.word;
}

std::pair<GenSet, GenSet> descents(const CoxeterElement& u) {
  const CoxeterGraph& g = *u.ambient;
  GenSet left = 0, right = 0;
  for (Gen s = 0; s < g.rank(); ++s) {
    Word ls;
    ls.reserve(u.word.size() + 1);
    ls.push_back(s);
    ls.insert(ls.end(), u.word.begin(), u.word.end());
    if (reduce(g, ls).length() < u.length()) left = setAdd(left, s);
    Word rs = u.word;
    rs.push_back(s);
    if (reduce(g, rs).length() < u.length()) right = setAdd(right, s);
  }
  return {left, right};
}

std::pair<CoxeterElement, CoxeterElement> cosetSplit(const CoxeterElement& u, GenSet X) {
  const CoxeterGraph& g = *u.ambient;
  CoxeterElement u0 = identity(g);
  CoxeterElement u1 = u;
  for (;;) {
    bool moved = false;
    for (Gen x = 0; x < g.rank() && !moved; ++x) {
      if (!setContains(X, x)) continue;
      Word xs;
      xs.reserve(u1.word.size() + 1);
      xs.push_back(x);
      xs.insert(xs.end(), u1.word.begin(), u1.word.end());
      CoxeterElement cand = reduce(g, xs);
      if (cand.length() < u1.length()) {
        u1 = cand;
        Word w0 = u0.word;
        w0.push_back(x);
        u0 = reduce(g, w0);
        moved = true;
      }
    }
    if (!moved) break;
  }
  return {u0, u1};
}

CoxeterElement theta(const ArtinWord& w) {
  if (!w.ambient) throw UsageError("word without ambient graph");
  Word pos;
  pos.reserve(w.letters.size());
  for (const Letter& l : w.letters) pos.push_back(l.gen);
  return reduce(*w.ambient, pos);
}

ArtinWord iota(const CoxeterElement& u) {
  ArtinWord w;
  w.ambient = u.ambient;
  for (Gen s : u.word) w.letters.push_back({s, +1});
  return w;
}

}  // namespace cox
}  // namespace gk
