#include "models.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <random>
#include <unordered_set>

namespace gktest {

using gk::ArtinWord;
using gk::CoxeterGraph;
using gk::Gen;
using gk::kInf;
using gk::Letter;
using gk::Word;

PermModel::PermModel(std::vector<std::vector<int>> gens) : gens_(std::move(gens)) {
  const size_t m = gens_.front().size();
  std::vector<int> id(m);
  for (size_t i = 0; i < m; ++i) id[i] = static_cast<int>(i);
  std::map<std::vector<int>, int> index;
  elems_.push_back(id);
  minWord_.push_back({});
  index[id] = 0;
  // ShortLex BFS: expand by generators in order, shorter words first.
  for (size_t head = 0; head < elems_.size(); ++head) {
    std::vector<int> cur = elems_[head];  // copy: elems_ may reallocate
    Word curWord = minWord_[head];
    for (int g = 0; g < genCount(); ++g) {
      std::vector<int> nxt(m);
      for (size_t i = 0; i < m; ++i) nxt[i] = gens_[g][cur[i]];  // cur * gen
      if (index.emplace(nxt, static_cast<int>(elems_.size())).second) {
        elems_.push_back(nxt);
        Word w = curWord;
        w.push_back(g);
        minWord_.push_back(std::move(w));
      }
    }
  }
}

int PermModel::find(const std::vector<int>& p) const {
  for (int i = 0; i < size(); ++i)
    if (elems_[i] == p) return i;
  return -1;
}

int PermModel::applyGen(int el, int g) const {
  const auto& cur = elems_[el];
  std::vector<int> nxt(cur.size());
  for (size_t i = 0; i < cur.size(); ++i) nxt[i] = gens_[g][cur[i]];
  return find(nxt);
}

int PermModel::applyGenLeft(int el, int g) const {
  const auto& cur = elems_[el];
  std::vector<int> nxt(cur.size());
  for (size_t i = 0; i < cur.size(); ++i) nxt[i] = cur[gens_[g][i]];
  return find(nxt);
}

int PermModel::mul(int a, int b) const {
  int r = a;
  for (Gen g : minWord_[b]) r = applyGen(r, g);
  return r;
}

int PermModel::inverse(int a) const {
  const auto& p = elems_[a];
  std::vector<int> inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return find(inv);
}

int PermModel::evalWord(const Word& w) const {
  int r = identity();
  for (Gen g : w) r = applyGen(r, g);
  return r;
}

PermModel modelA(int n) {
  const int m = n + 1;
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < n; ++i) {
    std::vector<int> p(m);
    for (int j = 0; j < m; ++j) p[j] = j;
    std::swap(p[i], p[i + 1]);
    gens.push_back(p);
  }
  return PermModel(gens);
}

PermModel modelB(int n) {
  // Points 0..n-1 are +coordinates, n..2n-1 their negatives.
  const int m = 2 * n;
  std::vector<std::vector<int>> gens;
  {
    std::vector<int> p(m);
    for (int j = 0; j < m; ++j) p[j] = j;
    std::swap(p[0], p[n]);  // sign flip on the first coordinate
    gens.push_back(p);
  }
  for (int i = 1; i < n; ++i) {
    std::vector<int> p(m);
    for (int j = 0; j < m; ++j) p[j] = j;
    std::swap(p[i - 1], p[i]);
    std::swap(p[n + i - 1], p[n + i]);
    gens.push_back(p);
  }
  return PermModel(gens);
}

PermModel modelI2(int m) {
  std::vector<std::vector<int>> gens;
  std::vector<int> s(m), t(m);
  for (int j = 0; j < m; ++j) {
    s[j] = ((m - j) % m + m) % m;      // j -> -j
    t[j] = ((1 - j) % m + m) % m;      // j -> 1-j
  }
  gens.push_back(s);
  gens.push_back(t);
  return PermModel(gens);
}

bool positiveWordsEqual(const CoxeterGraph& g, const Word& u, const Word& v,
                        long long cap) {
  if (u.size() != v.size()) return false;  // relations are homogeneous
  if (u == v) return true;
  std::unordered_set<Word, gk::WordHash> seen{u};
  std::deque<Word> queue{u};
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    const int n = static_cast<int>(cur.size());
    for (int i = 0; i + 1 < n; ++i) {
      Gen s = cur[i], t = cur[i + 1];
      if (s == t) continue;
      int m = g.label(s, t);
      if (m == kInf || i + m > n) continue;
      bool alt = true;
      for (int j = 0; j < m && alt; ++j)
        if (cur[i + j] != ((j % 2 == 0) ? s : t)) alt = false;
      if (!alt) continue;
      Word nxt = cur;
      for (int j = 0; j < m; ++j) nxt[i + j] = (j % 2 == 0) ? t : s;
      if (nxt == v) return true;
      if (seen.insert(nxt).second) {
        if (static_cast<long long>(seen.size()) > cap)
          throw gk::CapError("positive BFS oracle exceeded its cap");
        queue.push_back(std::move(nxt));
      }
    }
  }
  return false;
}

namespace {

using Enc = std::vector<int>;

Enc encode(const ArtinWord& w) {
  Enc e;
  for (const Letter& l : w.letters) e.push_back(2 * l.gen + (l.sign < 0 ? 1 : 0));
  return e;
}

Enc freeReduce(const Enc& in) {
  Enc r;
  for (int x : in) {
    if (!r.empty() && (r.back() ^ 1) == x)
      r.pop_back();
    else
      r.push_back(x);
  }
  return r;
}

std::vector<Enc> relatorRotations(const CoxeterGraph& g) {
  std::vector<Enc> out;
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
          out.push_back(std::move(rot));
        }
      }
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

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

}  // namespace

bool provedTrivial(const CoxeterGraph& g, const ArtinWord& w, long long stateCap,
                   int slack) {
  Enc start = freeReduce(encode(w));
  if (start.empty()) return true;
  const int maxLen = static_cast<int>(start.size()) + slack;
  auto relators = relatorRotations(g);

  auto cmp = [](const Enc& a, const Enc& b) { return a.size() > b.size(); };
  std::priority_queue<Enc, std::vector<Enc>, decltype(cmp)> queue(cmp);
  std::unordered_set<Enc, EncHash> seen{start};
  queue.push(start);
  long long states = 1;
  while (!queue.empty()) {
    Enc cur = queue.top();
    queue.pop();
    for (const Enc& rel : relators) {
      for (size_t pos = 0; pos <= cur.size(); ++pos) {
        Enc e;
        e.reserve(cur.size() + rel.size());
        e.insert(e.end(), cur.begin(), cur.begin() + pos);
        e.insert(e.end(), rel.begin(), rel.end());
        e.insert(e.end(), cur.begin() + pos, cur.end());
        e = freeReduce(e);
        if (e.empty()) return true;
        if (static_cast<int>(e.size()) > maxLen) continue;
        if (!seen.insert(e).second) continue;
        if (++states > stateCap) return false;
        queue.push(std::move(e));
      }
    }
  }
  return false;
}

ArtinWord scrambleWord(const CoxeterGraph& g, const ArtinWord& w, unsigned seed,
                       int steps) {
  std::mt19937 rng(seed);
  auto relators = relatorRotations(g);
  Enc cur = encode(w);
  for (int i = 0; i < steps; ++i) {
    if (!relators.empty() && rng() % 2 == 0) {
      const Enc& rel = relators[rng() % relators.size()];
      size_t pos = rng() % (cur.size() + 1);
      Enc e(cur.begin(), cur.begin() + pos);
      e.insert(e.end(), rel.begin(), rel.end());
      e.insert(e.end(), cur.begin() + pos, cur.end());
      cur = std::move(e);
    } else {
      // insert a cancelling pair
      int letter = 2 * static_cast<int>(rng() % g.rank()) + (rng() % 2);
      size_t pos = rng() % (cur.size() + 1);
      Enc e(cur.begin(), cur.begin() + pos);
      e.push_back(letter);
      e.push_back(letter ^ 1);
      e.insert(e.end(), cur.begin() + pos, cur.end());
      cur = std::move(e);
    }
    if (rng() % 3 == 0) cur = freeReduce(cur);
  }
  ArtinWord out;
  out.ambient = &g;
  for (int x : cur) out.letters.push_back({x / 2, (x & 1) ? -1 : +1});
  return out;
}

}  // namespace gktest
