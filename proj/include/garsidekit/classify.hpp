#pragma once

#include <optional>
#include <string>
#include <vector>

#include "garsidekit/graph.hpp"

namespace gk {

/// One irreducible factor of a spherical-type subset.
struct IrreducibleType {
  std::string name;   // "A3", "B2", "D4", "E6", "F4", "H3", "I2(7)", ...
  int rank = 0;
  long long kDelta = 0;     // exponent of the generator product giving the center
  long long order = 0;      // |W| of the factor
  GenSet support = 0;       // which generators of X form this component
};

/// Decompose the full subgraph on X (no-2-convention) into components and
/// match each against the finite-type classification. Absent when any
/// component falls outside it.
std::optional<std::vector<IrreducibleType>> classifySpherical(const CoxeterGraph& g,
                                                              GenSet X);

inline bool isSpherical(const CoxeterGraph& g, GenSet X) {
  return classifySpherical(g, X).has_value();
}

/// Product of factor orders; nullopt when not spherical.
std::optional<long long> sphericalOrder(const CoxeterGraph& g, GenSet X);

}  // namespace gk
