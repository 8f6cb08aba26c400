#include "garsidekit/garside.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>
#include <stdexcept>

#include "memo.hpp"

namespace gk {

int GarsideTable::atomPos(Gen g) const {
  for (size_t i = 0; i < atoms.size(); ++i)
    if (atoms[i] == g) return static_cast<int>(i);
  throw UsageError("letter outside the spherical subset");
}

int GarsideTable::atomId(Gen g) const { return mulRight[0][atomPos(g)]; }

int GarsideTable::mul(int a, int b) const {
  int id = a;
  for (Gen s : canon[b]) id = mulRight[id][atomPos(s)];
  return id;
}

int GarsideTable::meet(int a, int b) const {
  int m = 0;
  for (;;) {
    GenSet d = leftDesc[a] & leftDesc[b];
    if (!d) return m;
    Gen s = static_cast<Gen>(std::countr_zero(d));
    int pos = atomPos(s);
    m = mulRight[m][pos];
    a = mulLeft[a][pos];
    b = mulLeft[b][pos];
  }
}

int GarsideTable::join(int a, int b) const {
  return mul(deltaId, meet(mul(deltaId, a), mul(deltaId, b)));
}

int GarsideTable::meetSuffix(int a, int b) const {
  return invId[meet(invId[a], invId[b])];
}

int GarsideTable::joinSuffix(int a, int b) const {
  return invId[join(invId[a], invId[b])];
}

bool GarsideTable::isPrefix(int a, int b) const {
  return len[a] + len[mul(invId[a], b)] == len[b];
}

bool GarsideTable::leftWeighted(int a, int b) const {
  return (leftDesc[b] & ~rightDesc[a]) == 0;
}

namespace garside {
namespace {

std::shared_ptr<const GarsideTable> buildTable(const CoxeterGraph& g, GenSet X) {
  auto types = classifySpherical(g, X);
  if (!types) throw UsageError("subset is not of spherical type");
  long long order = 1;
  for (const auto& t : *types) order *= t.order;
  if (order > g.caps().latticeOrder)
    throw CapError("|W_X| = " + std::to_string(order) +
                   " exceeds the lattice cap (raise GARSIDEKIT_CAP)");

  auto tbl = std::make_shared<GarsideTable>();
  GarsideTable& t = *tbl;
  t.graph = &g;
  t.subset = X;
  t.atoms = setToList(X);
  const int na = static_cast<int>(t.atoms.size());

  t.canon.push_back({});
  t.idOf.emplace(Word{}, 0);
  t.mulRight.push_back(std::vector<int>(na, -1));
  for (int u = 0; u < static_cast<int>(t.canon.size()); ++u) {
    for (int a = 0; a < na; ++a) {
      Word w = t.canon[u];
      w.push_back(t.atoms[a]);
      Word c = cox::reduce(g, w).word;
      auto it = t.idOf.find(c);
      int v;
      if (it == t.idOf.end()) {
        v = static_cast<int>(t.canon.size());
        t.canon.push_back(c);
        t.idOf.emplace(std::move(c), v);
        t.mulRight.push_back(std::vector<int>(na, -1));
      } else {
        v = it->second;
      }
      t.mulRight[u][a] = v;
    }
  }
  t.size = static_cast<int>(t.canon.size());
  if (t.size != order) throw std::logic_error("W_X enumeration disagrees with the classification");

  t.len.resize(t.size);
  t.mulLeft.assign(t.size, std::vector<int>(na, -1));
  for (int u = 0; u < t.size; ++u) {
    t.len[u] = static_cast<int>(t.canon[u].size());
    for (int a = 0; a < na; ++a) {
      Word w;
      w.push_back(t.atoms[a]);
      w.insert(w.end(), t.canon[u].begin(), t.canon[u].end());
      t.mulLeft[u][a] = t.idOf.at(cox::reduce(g, w).word);
    }
  }

  t.invId.resize(t.size);
  for (int u = 0; u < t.size; ++u) {
    Word w(t.canon[u].rbegin(), t.canon[u].rend());
    t.invId[u] = t.idOf.at(cox::reduce(g, w).word);
  }

  t.deltaId = 0;
  for (int u = 0; u < t.size; ++u)
    if (t.len[u] > t.len[t.deltaId]) t.deltaId = u;
  t.deltaLen = t.len[t.deltaId];
  for (int u = 0; u < t.size; ++u)
    if (u != t.deltaId && t.len[u] == t.deltaLen)
      throw std::logic_error("longest element is not unique");

  t.leftDesc.resize(t.size);
  t.rightDesc.resize(t.size);
  for (int u = 0; u < t.size; ++u) {
    GenSet l = 0, r = 0;
    for (int a = 0; a < na; ++a) {
      if (t.len[t.mulLeft[u][a]] < t.len[u]) l = setAdd(l, t.atoms[a]);
      if (t.len[t.mulRight[u][a]] < t.len[u]) r = setAdd(r, t.atoms[a]);
    }
    t.leftDesc[u] = l;
    t.rightDesc[u] = r;
  }

  t.tauId.resize(t.size);
  t.compId.resize(t.size);
  for (int u = 0; u < t.size; ++u) {
    t.tauId[u] = t.mul(t.deltaId, t.mul(u, t.deltaId));
    t.compId[u] = t.mul(t.invId[u], t.deltaId);
  }
  return tbl;
}

}  // namespace

const GarsideTable& table(const CoxeterGraph& g, GenSet X) {
  auto& memo = g.memo();
  {
    std::lock_guard<std::mutex> lock(memo.mtx);
    auto it = memo.garside.find(X);
    if (it != memo.garside.end()) return *it->second;
  }
  auto tbl = buildTable(g, X);
  std::lock_guard<std::mutex> lock(memo.mtx);
  auto [it, inserted] = memo.garside.emplace(X, std::move(tbl));
  return *it->second;
}

namespace {

int tauPow(const GarsideTable& t, long long k, int x) {
  return (k % 2 != 0) ? t.tauId[x] : x;
}

/// Left normal form from a raw factor list: strip identities, absorb Deltas
/// into the power, and left-slide adjacent pairs until every pair is
/// left-weighted. This is the iterated local sliding y_i' = y_i y_{i+1} ^ Delta.
void renormalize(const GarsideTable& t, long long& p, std::vector<int>& xs) {
  for (;;) {
    bool changed = false;
    for (size_t i = 0; i < xs.size();) {
      if (xs[i] == 0) {
        xs.erase(xs.begin() + i);
        changed = true;
      } else if (xs[i] == t.deltaId) {
        for (size_t j = 0; j < i; ++j) xs[j] = t.tauId[xs[j]];
        xs.erase(xs.begin() + i);
        ++p;
        changed = true;
      } else {
        ++i;
      }
    }
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
      if (xs[i] == t.deltaId || xs[i + 1] == 0) continue;
      int d = t.meet(t.compId[xs[i]], xs[i + 1]);
      if (d != 0) {
        xs[i] = t.mul(xs[i], d);
        xs[i + 1] = t.mul(t.invId[d], xs[i + 1]);
        changed = true;
      }
    }
    if (!changed) return;
  }
}

GarsideElement make(const GarsideTable& t, long long p, std::vector<int> xs) {
  renormalize(t, p, xs);
  return GarsideElement{t.graph, t.subset, p, std::move(xs)};
}

const GarsideTable& tbl(const GarsideElement& g) {
  return table(*g.graph, g.subset);
}

void checkSameAmbient(const GarsideElement& a, const GarsideElement& b) {
  if (a.graph != b.graph || a.subset != b.subset)
    throw UsageError("ambient mismatch between Garside elements");
}

Word positiveWord(const GarsideTable& t, const GarsideElement& g) {
  if (g.power < 0) throw std::logic_error("positiveWord on a non-positive element");
  Word w;
  for (long long i = 0; i < g.power; ++i)
    w.insert(w.end(), t.canon[t.deltaId].begin(), t.canon[t.deltaId].end());
  for (int x : g.factors)
    w.insert(w.end(), t.canon[x].begin(), t.canon[x].end());
  return w;
}

}  // namespace

GarsideElement identity(const CoxeterGraph& g, GenSet X) {
  table(g, X);
  return GarsideElement{&g, X, 0, {}};
}

GarsideElement deltaPower(const CoxeterGraph& g, GenSet X, long long p) {
  table(g, X);
  return GarsideElement{&g, X, p, {}};
}

GarsideElement atom(const CoxeterGraph& g, GenSet X, Gen s, int sign) {
  const GarsideTable& t = table(g, X);
  // renormalize: in rank one the atom is Delta itself
  GarsideElement a = make(t, 0, {t.atomId(s)});
  return sign > 0 ? a : inverse(a);
}

CoxeterElement deltaElement(const CoxeterGraph& g, GenSet X) {
  const GarsideTable& t = table(g, X);
  return CoxeterElement{t.canon[t.deltaId], &g};
}

GarsideElement normalize(const ArtinWord& w, GenSet X) {
  if (!w.ambient) throw UsageError("word without ambient graph");
  const GarsideTable& t = table(*w.ambient, X);
  long long p = 0;
  std::vector<int> xs;
  for (const Letter& l : w.letters) {
    if (!setContains(X, l.gen)) throw UsageError("letter outside the spherical subset");
    if (l.sign > 0) {
      xs.push_back(t.atomId(l.gen));
    } else {
      // alpha * s^-1 = Delta^{p-1} tau(x_1)...tau(x_r) * (Delta s^-1)
      --p;
      for (int& x : xs) x = t.tauId[x];
      xs.push_back(t.mulRight[t.deltaId][t.atomPos(l.gen)]);
    }
  }
  return make(t, p, std::move(xs));
}

GarsideElement fromPositive(const CoxeterGraph& g, GenSet X, const Word& w) {
  const GarsideTable& t = table(g, X);
  std::vector<int> xs;
  xs.reserve(w.size());
  for (Gen s : w) xs.push_back(t.atomId(s));
  return make(t, 0, std::move(xs));
}

GarsideElement mul(const GarsideElement& a, const GarsideElement& b) {
  checkSameAmbient(a, b);
  const GarsideTable& t = tbl(a);
  std::vector<int> xs;
  xs.reserve(a.factors.size() + b.factors.size());
  for (int x : a.factors) xs.push_back(tauPow(t, b.power, x));
  xs.insert(xs.end(), b.factors.begin(), b.factors.end());
  return make(t, a.power + b.power, std::move(xs));
}

GarsideElement inverse(const GarsideElement& a) {
  const GarsideTable& t = tbl(a);
  const long long p = a.power;
  const long long r = static_cast<long long>(a.factors.size());
  // alpha^-1 = Delta^-(p+r) (Delta^{p+r-1} x_r' Delta^{-(p+r-1)}) ...
  //            (Delta^p x_1' Delta^-p), x_i' = Delta x_i^-1.
  std::vector<int> xs;
  xs.reserve(a.factors.size());
  for (long long j = 1; j <= r; ++j) {
    int xi = a.factors[static_cast<size_t>(r - j)];
    int lcompl = t.mul(t.deltaId, t.invId[xi]);
    xs.push_back(tauPow(t, p + r - j, lcompl));
  }
  GarsideElement out{a.graph, a.subset, -(p + r), std::move(xs)};
  checkNormalForm(out);  // emitted form must already be left-weighted
  return out;
}

GarsideElement conjugate(const GarsideElement& g, const GarsideElement& by) {
  return mul(mul(by, g), inverse(by));
}

Profile profile(const GarsideElement& g) {
  return Profile{g.power, g.power + static_cast<long long>(g.factors.size()),
                 static_cast<long long>(g.factors.size())};
}

std::pair<GarsideElement, GarsideElement> mixedNp(const GarsideElement& g) {
  const GarsideTable& t = tbl(g);
  const long long p = g.power;
  const long long r = static_cast<long long>(g.factors.size());
  if (p >= 0) return {identity(*g.graph, g.subset), g};
  if (p + r <= 0) return {inverse(g), identity(*g.graph, g.subset)};
  GarsideElement neg{g.graph, g.subset, p,
                     std::vector<int>(g.factors.begin(), g.factors.begin() - p)};
  GarsideElement b{g.graph, g.subset, 0,
                   std::vector<int>(g.factors.begin() - p, g.factors.end())};
  (void)t;
  return {inverse(neg), b};
}

namespace {

// Mirror antiautomorphism: reverse the word. Reversal inverts each simple and
// reverses the factor order; renormalize afterwards.
GarsideElement revElement(const GarsideElement& g) {
  const GarsideTable& t = tbl(g);
  std::vector<int> xs;
  xs.reserve(g.factors.size());
  for (auto it = g.factors.rbegin(); it != g.factors.rend(); ++it)
    xs.push_back(tauPow(t, g.power, t.invId[*it]));
  return make(t, g.power, std::move(xs));
}

}  // namespace

std::pair<GarsideElement, GarsideElement> mixedPn(const GarsideElement& g) {
  auto [ar, br] = mixedNp(revElement(g));
  return {revElement(br), revElement(ar)};
}

RightNormalForm rightNormalForm(const GarsideElement& g) {
  const GarsideTable& t = tbl(g);
  GarsideElement r = revElement(g);
  RightNormalForm out;
  out.power = r.power;
  for (auto it = r.factors.rbegin(); it != r.factors.rend(); ++it)
    out.factors.push_back(t.invId[*it]);
  return out;
}

ArtinWord toWord(const GarsideElement& g) {
  const GarsideTable& t = tbl(g);
  auto [a, b] = mixedNp(g);
  ArtinWord w;
  w.ambient = g.graph;
  Word wa = positiveWord(t, a);
  for (auto it = wa.rbegin(); it != wa.rend(); ++it) w.letters.push_back({*it, -1});
  for (Gen s : positiveWord(t, b)) w.letters.push_back({s, +1});
  return w;
}

std::pair<GarsideElement, GarsideElement> cycling(const GarsideElement& g) {
  if (g.factors.empty())
    throw UsageError("cycling is undefined on pure Delta powers");
  const GarsideTable& t = tbl(g);
  int moved = tauPow(t, g.power, g.factors.front());
  std::vector<int> xs(g.factors.begin() + 1, g.factors.end());
  xs.push_back(moved);
  GarsideElement conj{g.graph, g.subset, 0, {moved}};
  return {make(t, g.power, std::move(xs)), conj};
}

std::pair<GarsideElement, GarsideElement> swapOp(const GarsideElement& g) {
  auto [a, b] = mixedNp(g);
  if (a.isIdentity() || b.isIdentity()) return {g, identity(*g.graph, g.subset)};
  return {mul(b, inverse(a)), a};
}

Recurrence recurrent(const GarsideElement& g) {
  const GarsideTable& t = tbl(g);
  const long long cap =
      std::min<long long>(g.graph->caps().iterations,
                          10 * (profile(g).sup - profile(g).inf + 1) * std::max(1, t.deltaLen) + 64);
  std::vector<GarsideElement> states{g};
  std::vector<GarsideElement> cumulative{identity(*g.graph, g.subset)};
  std::unordered_map<size_t, std::vector<int>> seen;  // hash -> state indices

  auto keyHash = [](const GarsideElement& e) {
    std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(e.power);
    for (int x : e.factors) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  };
  seen[keyHash(g)].push_back(0);

  GarsideElement cur = g;
  for (long long step = 0; step < cap; ++step) {
    auto [next, a] = swapOp(cur);
    Profile before = profile(cur), after = profile(next);
    if (after.inf < before.inf || after.sup > before.sup)
      throw std::logic_error("swap broke inf/sup monotonicity");
    GarsideElement cum = mul(a, cumulative.back());
    auto& bucket = seen[keyHash(next)];
    for (int idx : bucket) {
      if (states[idx] == next) {
        Recurrence rec;
        rec.witness = states[idx];
        rec.conjugator = cumulative[idx];
        rec.circuit.assign(states.begin() + idx, states.end());
        return rec;
      }
    }
    bucket.push_back(static_cast<int>(states.size()));
    states.push_back(next);
    cumulative.push_back(cum);
    cur = next;
  }
  throw CapError("swap iteration cap exceeded");
}

GenSet support(const GarsideElement& g) {
  const GarsideTable& t = tbl(g);
  auto [a, b] = mixedNp(g);
  GenSet s = 0;
  for (Gen x : positiveWord(t, a)) s = setAdd(s, x);
  for (Gen x : positiveWord(t, b)) s = setAdd(s, x);
  return s;
}

GarsideElement centerGenerator(const CoxeterGraph& g, GenSet X) {
  auto types = classifySpherical(g, X);
  if (!types) throw UsageError("subset is not of spherical type");
  if (types->size() != 1)
    throw UsageError("center generator needs an irreducible subset");
  const GarsideTable& t = table(g, X);
  Word w;
  for (long long i = 0; i < (*types)[0].kDelta; ++i)
    w.insert(w.end(), t.atoms.begin(), t.atoms.end());
  GarsideElement z = fromPositive(g, X, w);
  if (!(z.factors.empty() && (z.power == 1 || z.power == 2)))
    throw std::logic_error("center generator is not Delta or Delta^2");
  for (Gen s : t.atoms) {
    GarsideElement a = atom(g, X, s);
    if (!(mul(z, a) == mul(a, z)))
      throw std::logic_error("center generator does not commute with an atom");
  }
  return z;
}

GarsideElement centerGeneratorProduct(const CoxeterGraph& g, GenSet X) {
  GarsideElement z = identity(g, X);
  for (GenSet comp : g.components(X)) {
    GarsideElement zc = centerGenerator(g, comp);
    ArtinWord w = toWord(zc);
    w.ambient = &g;
    z = mul(z, normalize(w, X));
  }
  return z;
}

bool memberStandard(const GarsideElement& g, GenSet Y) {
  if (!setSubset(Y, g.subset)) throw UsageError("Y is not a subset of the ambient");
  return setSubset(support(g), Y);
}

long long exponentSum(const GarsideElement& g) {
  const GarsideTable& t = tbl(g);
  long long s = g.power * t.deltaLen;
  for (int x : g.factors) s += t.len[x];
  return s;
}

void checkNormalForm(const GarsideElement& g) {
  const GarsideTable& t = tbl(g);
  for (size_t i = 0; i < g.factors.size(); ++i) {
    int x = g.factors[i];
    if (x == 0 || x == t.deltaId)
      throw std::logic_error("normal form contains an identity or Delta factor");
    if (i + 1 < g.factors.size() && !t.leftWeighted(x, g.factors[i + 1]))
      throw std::logic_error("adjacent factors are not left-weighted");
  }
}

}  // namespace garside
}  // namespace gk
