#include "garsidekit/classify.hpp"

#include <algorithm>

namespace gk {
namespace {

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

struct Edge {
  Gen a, b;
  int m;
};

// Recognize one connected no-2-convention component against the finite-type
// list. Generators in `vs` are global indices; edges carry labels >= 3.
std::optional<IrreducibleType> matchComponent(const CoxeterGraph& g, GenSet comp) {
  std::vector<Gen> vs = setToList(comp);
  const int n = static_cast<int>(vs.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = g.label(vs[i], vs[j]);
      if (m == kInf) return std::nullopt;
      if (m >= 3) edges.push_back({vs[i], vs[j], m});
    }

  IrreducibleType t;
  t.support = comp;
  t.rank = n;

  auto done = [&](std::string name, long long k, long long order) {
    t.name = std::move(name);
    t.kDelta = k;
    t.order = order;
    return t;
  };

  if (n == 1) return done("A1", 1, 2);

  if (n == 2) {
    if (edges.size() != 1) return std::nullopt;  // m=2 would be reducible
    int p = edges[0].m;
    if (p == 3) return done("A2", 3, 6);
    if (p == 4) return done("B2", 2, 8);
    // Table entry I2(p): p/2 for even p >= 6, p for odd p >= 5.
    return done("I2(" + std::to_string(p) + ")", p % 2 == 0 ? p / 2 : p, 2ll * p);
  }

  // Connectivity implies >= n-1 edges; finite types are trees.
  if (static_cast<int>(edges.size()) != n - 1) return std::nullopt;

  std::vector<int> deg(n, 0);
  auto li = [&](Gen v) {
    return static_cast<int>(std::find(vs.begin(), vs.end(), v) - vs.begin());
  };
  for (const Edge& e : edges) {
    ++deg[li(e.a)];
    ++deg[li(e.b)];
  }
  int maxDeg = *std::max_element(deg.begin(), deg.end());
  if (maxDeg > 3) return std::nullopt;
  int branchCount = static_cast<int>(std::count(deg.begin(), deg.end(), 3));
  if (branchCount > 1) return std::nullopt;

  auto labelsSorted = [&]() {
    std::vector<int> ms;
    for (const Edge& e : edges) ms.push_back(e.m);
    std::sort(ms.begin(), ms.end());
    return ms;
  };

  if (branchCount == 0) {
    // A path; orient it from one endpoint and read the label sequence.
    std::vector<int> ends;
    for (int i = 0; i < n; ++i)
      if (deg[i] == 1) ends.push_back(i);
    if (ends.size() != 2) return std::nullopt;
    auto readPath = [&](int start) {
      std::vector<int> seq;
      int prev = -1, cur = start;
      for (int step = 0; step + 1 < n; ++step) {
        for (const Edge& e : edges) {
          int x = li(e.a), y = li(e.b);
          if (x == cur && y != prev) {
            seq.push_back(e.m);
            prev = cur;
            cur = y;
            break;
          }
          if (y == cur && x != prev) {
            seq.push_back(e.m);
            prev = cur;
            cur = x;
            break;
          }
        }
      }
      return seq;
    };
    std::vector<int> seq = readPath(ends[0]);
    std::vector<int> rev(seq.rbegin(), seq.rend());
    if (rev < seq) seq = rev;  // normalize orientation

    bool all3 = std::all_of(seq.begin(), seq.end(), [](int m) { return m == 3; });
    if (all3) return done("A" + std::to_string(n), n + 1, factorial(n + 1));

    // One 4 at an end, rest 3.
    if (seq.back() == 4 &&
        std::all_of(seq.begin(), seq.end() - 1, [](int m) { return m == 3; }))
      return done("B" + std::to_string(n), n, (1ll << n) * factorial(n));
    if (n == 4 && seq == std::vector<int>{3, 4, 3}) return done("F4", 6, 1152);
    if (n == 3 && (seq == std::vector<int>{3, 5})) return done("H3", 5, 120);
    if (n == 4 && (seq == std::vector<int>{3, 3, 5})) return done("H4", 15, 14400);
    return std::nullopt;
  }

  // One branch vertex of degree 3: D or E shapes, all labels 3.
  for (int m : labelsSorted())
    if (m != 3) return std::nullopt;
  // Branch arm lengths (edge counts from the branch vertex to each leaf).
  int branch = static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
  std::vector<int> arms;
  for (const Edge& e : edges) {
    int x = li(e.a), y = li(e.b);
    if (x != branch && y != branch) continue;
    int prev = branch, cur = (x == branch) ? y : x, len = 1;
    for (;;) {
      int next = -1;
      for (const Edge& f : edges) {
        int p = li(f.a), q = li(f.b);
        if (p == cur && q != prev) next = q;
        if (q == cur && p != prev) next = p;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) return std::nullopt;
  if (arms[0] == 1 && arms[1] == 1) {
    // D_n, n >= 4
    long long k = (n % 2 == 0) ? n - 1 : 2ll * n - 2;
    return done("D" + std::to_string(n), k, (1ll << (n - 1)) * factorial(n));
  }
  if (arms == std::vector<int>{1, 2, 2} && n == 6) return done("E6", 12, 51840);
  if (arms == std::vector<int>{1, 2, 3} && n == 7) return done("E7", 9, 2903040);
  if (arms == std::vector<int>{1, 2, 4} && n == 8) return done("E8", 15, 696729600);
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<IrreducibleType>> classifySpherical(const CoxeterGraph& g,
                                                              GenSet X) {
  std::vector<IrreducibleType> out;
  for (GenSet comp : g.components(X)) {
    auto t = matchComponent(g, comp);
    if (!t) return std::nullopt;
    out.push_back(*t);
  }
  return out;
}

std::optional<long long> sphericalOrder(const CoxeterGraph& g, GenSet X) {
  auto types = classifySpherical(g, X);
  if (!types) return std::nullopt;
  long long order = 1;
  for (const auto& t : *types) {
    if (order > (1ll << 62) / std::max(1ll, t.order)) return 1ll << 62;
    order *= t.order;
  }
  return order;
}

}  // namespace gk
