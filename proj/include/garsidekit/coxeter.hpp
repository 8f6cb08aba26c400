#pragma once

#include <utility>

#include "garsidekit/graph.hpp"

namespace gk {

/// Canonical (ShortLex-minimal) reduced word in the Coxeter group W of the
/// ambient graph. Words compare equal iff the group elements are equal.
struct CoxeterElement {
  Word word;
  const CoxeterGraph* ambient = nullptr;

  int length() const { return static_cast<int>(word.size()); }
  bool isIdentity() const { return word.empty(); }
  bool operator==(const CoxeterElement& o) const { return word == o.word; }
  bool operator!=(const CoxeterElement& o) const { return !(*this == o); }
};

namespace cox {

/// Tits rewriting: canonical reduced word equal to w in W. Idempotent.
CoxeterElement reduce(const CoxeterGraph& g, const Word& w);

CoxeterElement identity(const CoxeterGraph& g);
CoxeterElement mul(const CoxeterElement& u, const CoxeterElement& v);
CoxeterElement inverse(const CoxeterElement& u);
bool eq(const CoxeterElement& u, const CoxeterElement& v);

/// (leftSet, rightSet): generators shortening u from the given side.
std::pair<GenSet, GenSet> descents(const CoxeterElement& u);

/// u = u0 * u1 with u0 in W_X, l(u)=l(u0)+l(u1), u1 minimal in W_X u1.
std::pair<CoxeterElement, CoxeterElement> cosetSplit(const CoxeterElement& u, GenSet X);

/// Forget signs and reduce.
CoxeterElement theta(const ArtinWord& w);

/// The minimal-word section of theta: read the reduced word positively.
ArtinWord iota(const CoxeterElement& u);

}  // namespace cox
}  // namespace gk
