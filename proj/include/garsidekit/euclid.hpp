#pragma once

#include <memory>

#include "garsidekit/parabolic.hpp"

namespace gk {
namespace euclid {

/// Embedding data for a Euclidean braid group presented on a cycle of n+1
/// generators (all consecutive labels 3) into the spherical group on
/// r_1 ... r_{n+1} with the final label 4.
struct Context {
  const CoxeterGraph* source = nullptr;  // cycle graph; declaration order = t_0 ... t_n
  std::unique_ptr<CoxeterGraph> target;  // generators r1 ... r{n+1}
  int n = 0;                             // source rank - 1, n >= 2
};

/// Validates the cycle shape of the source graph.
Context makeContext(const CoxeterGraph& atildeGraph);

/// rho = r_1 ... r_n r_{n+1} as a word in the target.
ArtinWord rhoWord(const Context& ctx);

/// t_i -> r_i for i >= 1, t_0 -> rho r_n rho^-1, letterwise.
ArtinWord embed(const Context& ctx, const ArtinWord& w);

/// Signed count of r_{n+1} letters in a target word; vanishes exactly on the
/// image of the embedding.
long long xi(const Context& ctx, const ArtinWord& targetWord);

/// The index-shift automorphism t_i -> t_{i+k mod n+1}.
ArtinWord shift(const Context& ctx, const ArtinWord& w, long long k);

/// Inverse of the embedding on the kernel of xi.
ArtinWord pullback(const Context& ctx, const ArtinWord& targetWord);

struct IntersectResult {
  ParabolicPair subgroup;
  parabolic::IntersectCertificate certificate;
};

/// Intersection of two proper parabolics of the cycle presentation, computed
/// in the target group and pulled back through h = h_1 rho^m, with the base
/// shifted by the index automorphism.
IntersectResult intersect(const Context& ctx, const ParabolicPair& P,
                          const ParabolicPair& Q, int ballRadius);

}  // namespace euclid
}  // namespace gk
