#pragma once

#include <optional>
#include <vector>

#include "garsidekit/coxeter.hpp"
#include "garsidekit/oracle.hpp"

namespace gk {
namespace salvetti {

/// Per-letter record of the word retraction: the Coxeter prefix u_j, its
/// split u_j = u'_j u''_j over X, the conjugated reflection x_j when it is a
/// generator, and the surviving letter.
struct LetterTrace {
  Letter input;
  CoxeterElement u;       // theta of the prefix ending at this letter
  CoxeterElement u0, u1;  // u = u0 * u1, u0 in W_X, u1 coset-minimal
  std::optional<Gen> x;   // u'' s u''^-1 when that element is a generator
  std::optional<Letter> chi;
};

struct Retraction {
  ArtinWord word;  // concatenation of the surviving letters
  std::vector<LetterTrace> trace;
};

/// Word retraction onto the letters of X, through the lift/split recursion.
/// Works in any Artin ambient; Coxeter arithmetic is capped, not enumerated.
Retraction retractWord(const ArtinWord& w, GenSet X);

/// True iff w represents an element of A_X, decided through the retraction
/// and the given equality oracle; Unknown when the oracle cannot decide.
Tri memberStandardGeneral(const ArtinWord& w, GenSet X, const WordOracle& oracle);

struct ConvexityReport {
  long long wordsScanned = 0;
  long long geodesicsChecked = 0;
  std::vector<std::string> violations;  // expected empty
  bool pass() const { return violations.empty(); }
};

/// Enumerate every geodesic word of length <= maxLen for elements of A_X
/// (BFS in the word metric of the spherical ambient) and check all letters
/// stay in X.
ConvexityReport convexityScan(const CoxeterGraph& g, GenSet X, int maxLen);

}  // namespace salvetti
}  // namespace gk
