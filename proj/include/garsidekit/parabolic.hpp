#pragma once

#include <bit>
#include <utility>

#include "garsidekit/garside.hpp"

namespace gk {

/// P = alpha A_X alpha^-1 inside a spherical ambient, with the canonical
/// central element cached. Two values represent the same subgroup iff their
/// z's are equal. X = 0 encodes the trivial subgroup (z = identity).
struct ParabolicSubgroup {
  const CoxeterGraph* graph = nullptr;
  GenSet ambient = 0;  // spherical subset defining the ambient group
  GarsideElement conjugator;
  GenSet base = 0;
  GarsideElement z;
  bool irreducible = false;

  bool isTrivial() const { return base == 0; }
  int dimension() const { return static_cast<int>(std::popcount(base)); }
};

/// General-ambient parabolic representation: conjugator word plus subset.
/// Used where no Garside structure is available (FC, even, Euclidean).
struct ParabolicPair {
  ArtinWord conj;
  GenSet base = 0;
};

namespace parabolic {

ParabolicSubgroup make(const CoxeterGraph& g, GenSet ambient,
                       const GarsideElement& conj, GenSet base);
ParabolicSubgroup trivial(const CoxeterGraph& g, GenSet ambient);
ParabolicSubgroup standard(const CoxeterGraph& g, GenSet ambient, GenSet base);

bool member(const GarsideElement& el, const ParabolicSubgroup& P);
bool eq(const ParabolicSubgroup& P, const ParabolicSubgroup& Q);
ParabolicSubgroup conjugated(const ParabolicSubgroup& P, const GarsideElement& h);  // h P h^-1

/// The unique minimal parabolic containing el, through the swap circuit.
ParabolicSubgroup closure(const GarsideElement& el);

struct IntersectCertificate {
  bool zInP = false, zInQ = false;  // exact inclusion proof for the result
  int ballRadius = 0;
  bool exact = false;  // true for identical/standard pairs decided exactly
};

struct IntersectResult {
  ParabolicSubgroup subgroup;
  IntersectCertificate certificate;
};

/// Certified intersection: the result R always satisfies R <= P and R <= Q
/// (closure minimality); every element of the radius-bounded balls of P and
/// Q lying in both subgroups is verified to lie in R, escalating the
/// candidate through center/Delta boosts when needed.
IntersectResult intersect(const ParabolicSubgroup& P, const ParabolicSubgroup& Q,
                          int ballRadius);

/// P <= A_X re-expressed with conjugator inside A_X and base inside X.
std::pair<GarsideElement, GenSet> restandardise(const ParabolicSubgroup& P, GenSet X);

}  // namespace parabolic
}  // namespace gk
