#pragma once

#include <memory>
#include <vector>

#include "garsidekit/parabolic.hpp"

namespace gk {
namespace fc {

/// Every infinity-free subset of X spans a spherical subgroup.
bool isFcType(const CoxeterGraph& g, GenSet X);

/// Binary decomposition tree realizing A = A_I *_{A_K} A_J at each internal
/// node; leaves are spherical subsets. When the finite-label graph is
/// disconnected the split is the free product of a component against the
/// rest (K empty); otherwise the lexicographically least infinite pair (s,t)
/// gives I = X minus s, J = X minus t. Sides are ordered so I contains the
/// ShortLex-least generator.
struct AmalgamNode {
  GenSet gens = 0;
  bool leaf = false;
  GenSet I = 0, J = 0, K = 0;
  std::pair<Gen, Gen> removed{-1, -1};  // (s,t) with m=inf, s notin I, t notin J
  std::unique_ptr<AmalgamNode> left, right;
};

std::unique_ptr<AmalgamNode> factorize(const CoxeterGraph& g, GenSet X);

/// Nested {I, J, K} records; leaves carry their generator set.
std::string decompositionToJson(const CoxeterGraph& g, const AmalgamNode& node);

/// Exact word problem through syllable pinching over the decomposition.
bool wordTrivial(const ArtinWord& w, GenSet X);
bool wordsEqual(const ArtinWord& a, const ArtinWord& b, GenSet X);

/// Syllables left after pinch reduction at the top decomposition node.
/// `reverseScan` flips the pinch-selection order; the count is an invariant
/// of the element, not of the strategy.
int reducedSyllableCount(const ArtinWord& w, GenSet X, bool reverseScan = false);

/// w in A_K, ambient A_X (exact: retract and compare).
bool memberStandardFc(const ArtinWord& w, GenSet X, GenSet K);

/// Rewrite w as a word over K; requires membership.
ArtinWord rewriteInto(const ArtinWord& w, GenSet X, GenSet K);

/// Vertex g A_side of the Bass-Serre tree of the top-level decomposition of
/// X; side is the I or J subset itself.
struct TreeVertex {
  ArtinWord rep;
  GenSet side = 0;
};

struct TreePath {
  std::vector<TreeVertex> vertices;
  std::vector<ArtinWord> edgeReps;  // edge i joins vertices i, i+1 as rep*A_K
  int pinchCount = 0;               // syllable reductions used
};

bool vertexEq(const CoxeterGraph& g, GenSet X, const TreeVertex& u, const TreeVertex& v);

/// The unique reduced path between two vertices of the same tree.
TreePath geodesic(const CoxeterGraph& g, GenSet X, const TreeVertex& u,
                  const TreeVertex& v);

enum class CertMode { Exact, Ball, Undecided };

struct IntersectResult {
  ParabolicPair subgroup;
  CertMode mode = CertMode::Exact;
  int ballRadius = 0;
};

/// Intersection P cap Q with P of spherical type, by the double induction on
/// the infinite-pair count and the tree distance. Conjugator transports are
/// verified by the exact FC oracle; a failed bounded transport downgrades the
/// certificate to Undecided instead of guessing.
IntersectResult intersectSphericalAny(const CoxeterGraph& g, GenSet X,
                                      const ParabolicPair& P, const ParabolicPair& Q,
                                      int ballRadius);

}  // namespace fc
}  // namespace gk
