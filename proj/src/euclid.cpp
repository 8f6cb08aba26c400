#include "garsidekit/euclid.hpp"

#include <map>

namespace gk {
namespace euclid {
namespace {

long long posmod(long long a, long long m) { return ((a % m) + m) % m; }

}  // namespace

Context makeContext(const CoxeterGraph& atildeGraph) {
  const int rank = atildeGraph.rank();
  if (rank < 3)
    throw UsageError("the cycle presentation needs at least three generators");
  const int n = rank - 1;
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == rank - 1);
      int expect = adjacent ? 3 : 2;
      if (atildeGraph.label(i, j) != expect)
        throw UsageError("graph is not the cycle presentation (labels 3 around, 2 across)");
    }

  Context ctx;
  ctx.source = &atildeGraph;
  ctx.n = n;
  std::vector<std::string> names;
  std::map<std::pair<Gen, Gen>, int> labels;
  for (int i = 1; i <= n + 1; ++i) names.push_back("r" + std::to_string(i));
  for (int i = 0; i < n + 1; ++i)
    for (int j = i + 1; j < n + 1; ++j) labels[{i, j}] = (j == i + 1) ? 3 : 2;
  labels[{n - 1, n}] = 4;  // r_n, r_{n+1}
  ctx.target = std::make_unique<CoxeterGraph>(names, labels, atildeGraph.caps());
  return ctx;
}

ArtinWord rhoWord(const Context& ctx) {
  ArtinWord w;
  w.ambient = ctx.target.get();
  for (int i = 0; i <= ctx.n; ++i) w.letters.push_back({i, +1});
  return w;
}

ArtinWord embed(const Context& ctx, const ArtinWord& w) {
  ArtinWord out;
  out.ambient = ctx.target.get();
  ArtinWord rho = rhoWord(ctx);
  for (const Letter& l : w.letters) {
    if (l.gen < 0 || l.gen > ctx.n) throw UsageError("letter index out of range");
    if (l.gen >= 1) {
      out.letters.push_back({l.gen - 1, l.sign});  // t_i -> r_i
    } else {
      // t_0 -> rho r_n rho^-1
      out.append(rho);
      out.letters.push_back({ctx.n - 1, l.sign});
      out.append(rho.inverse());
    }
  }
  return out.freeReduced();
}

long long xi(const Context& ctx, const ArtinWord& targetWord) {
  long long s = 0;
  for (const Letter& l : targetWord.letters)
    if (l.gen == ctx.n) s += l.sign;
  return s;
}

ArtinWord shift(const Context& ctx, const ArtinWord& w, long long k) {
  ArtinWord out;
  out.ambient = ctx.source;
  const long long mod = ctx.n + 1;
  for (const Letter& l : w.letters)
    out.letters.push_back({static_cast<Gen>(posmod(l.gen + k, mod)), l.sign});
  return out;
}

ArtinWord pullback(const Context& ctx, const ArtinWord& targetWord) {
  if (xi(ctx, targetWord) != 0)
    throw UsageError("word is not in the kernel of xi");
  const long long mod = ctx.n + 1;
  ArtinWord out;
  out.ambient = ctx.source;
  long long sigma = 0;
  auto emit = [&](long long tIndex, int sign) {
    out.letters.push_back({static_cast<Gen>(posmod(tIndex + sigma, mod)), sign});
  };
  for (const Letter& l : targetWord.letters) {
    if (l.gen < ctx.n) {
      emit(l.gen + 1, l.sign);  // r_i -> t_i
    } else if (l.sign > 0) {
      // r_{n+1} = (t_n^-1 ... t_1^-1) u
      for (int i = ctx.n; i >= 1; --i) emit(i, -1);
      ++sigma;
    } else {
      // r_{n+1}^-1 = u^-1 (t_1 ... t_n)
      --sigma;
      for (int i = 1; i <= ctx.n; ++i) emit(i, +1);
    }
  }
  if (sigma != 0) throw std::logic_error("xi bookkeeping failed in pullback");
  return out.freeReduced();
}

IntersectResult intersect(const Context& ctx, const ParabolicPair& P,
                          const ParabolicPair& Q, int ballRadius) {
  const CoxeterGraph& src = *ctx.source;
  const CoxeterGraph& tgt = *ctx.target;
  const GenSet fullSrc = src.fullSet();
  if (P.base == fullSrc || Q.base == fullSrc)
    throw UsageError("proper parabolic subgroups required");

  auto toTarget = [&](const ParabolicPair& pp) {
    // Shift the base away from t_0, then read generators through the
    // embedding: A_{X} = f^{-k}(A_{X'}), so the image conjugator picks up
    // rho^{-k}.
    long long k = 0;
    const long long mod = ctx.n + 1;
    if (setContains(pp.base, 0)) {
      Gen j = 0;
      while (setContains(pp.base, j)) ++j;  // exists: base is proper
      k = posmod(mod - j, mod);
    }
    GenSet shifted = 0;
    for (Gen i = 0; i <= ctx.n; ++i)
      if (setContains(pp.base, i)) shifted = setAdd(shifted, posmod(i + k, mod));
    GenSet rbase = 0;
    for (Gen i = 1; i <= ctx.n; ++i)
      if (setContains(shifted, i)) rbase = setAdd(rbase, i - 1);
    ArtinWord conj = embed(ctx, pp.conj);
    ArtinWord rho = rhoWord(ctx);
    for (long long i = 0; i < k; ++i) conj = conj.concat(rho.inverse());
    conj = conj.freeReduced();
    return std::make_pair(garside::normalize(conj, tgt.fullSet()), rbase);
  };

  auto [pc, pb] = toTarget(P);
  auto [qc, qb] = toTarget(Q);
  ParabolicSubgroup Pt = parabolic::make(tgt, tgt.fullSet(), pc, pb);
  ParabolicSubgroup Qt = parabolic::make(tgt, tgt.fullSet(), qc, qb);
  auto res = parabolic::intersect(Pt, Qt, ballRadius);

  IntersectResult out;
  out.certificate = res.certificate;
  out.subgroup.conj.ambient = &src;
  out.subgroup.base = 0;
  if (res.subgroup.isTrivial()) return out;

  // gamma = h_1 rho^m with m = xi(gamma); the pulled-back base is the
  // index-shift of the preimage of the target base.
  if (setContains(res.subgroup.base, ctx.n))
    throw std::logic_error("intersection base contains r_{n+1} despite xi = 0");
  ArtinWord gamma = garside::toWord(res.subgroup.conjugator);
  long long m = xi(ctx, gamma);
  ArtinWord rho = rhoWord(ctx);
  ArtinWord h1 = gamma;
  for (long long i = 0; i < (m >= 0 ? m : -m); ++i)
    h1 = h1.concat(m >= 0 ? rho.inverse() : rho);
  h1 = h1.freeReduced();
  out.subgroup.conj = pullback(ctx, h1);
  GenSet base = 0;
  for (Gen i = 0; i < ctx.n; ++i)
    if (setContains(res.subgroup.base, i))
      base = setAdd(base, posmod((i + 1) + m, ctx.n + 1));
  out.subgroup.base = base;
  return out;
}

}  // namespace euclid
}  // namespace gk
