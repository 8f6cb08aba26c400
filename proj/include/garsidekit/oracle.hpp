#pragma once

#include <memory>
#include <string>

#include "garsidekit/graph.hpp"

namespace gk {

enum class Tri { False = 0, True = 1, Unknown = 2 };

/// Word-problem plug-in. `trivial` must never lie: True and False are exact
/// verdicts, Unknown means the backend cannot decide.
class WordOracle {
 public:
  virtual ~WordOracle() = default;
  virtual Tri trivial(const ArtinWord& w) const = 0;
  virtual std::string name() const = 0;

  Tri equal(const ArtinWord& a, const ArtinWord& b) const {
    return trivial(a.concat(b.inverse()));
  }
};

namespace oracle {

/// Exact oracle backed by Garside normal forms; subset must be spherical.
std::unique_ptr<WordOracle> spherical(const CoxeterGraph& g, GenSet subset);

/// Exact oracle backed by the amalgam decomposition; subset must be FC.
std::unique_ptr<WordOracle> fcAmalgam(const CoxeterGraph& g, GenSet subset);

/// Best available backend: spherical, then FC, then a desk-scale prover that
/// splits along direct factors, refutes through abelianization and (for even
/// graphs) the letter-filter retractions, and proves by bounded rewriting
/// search. Never null; may answer Unknown.
std::unique_ptr<WordOracle> best(const CoxeterGraph& g, GenSet subset);

/// Bounded rewriting search: free cancellation, braid moves on same-signed
/// runs and bounded insertion of cancelling pairs. True when the empty word
/// is reached, Unknown otherwise.
Tri proveTrivialBounded(const CoxeterGraph& g, const ArtinWord& w,
                        long long stateCap, int lengthSlack);

}  // namespace oracle
}  // namespace gk
