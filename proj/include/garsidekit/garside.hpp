#pragma once

#include <memory>
#include <vector>

#include "garsidekit/classify.hpp"
#include "garsidekit/coxeter.hpp"

namespace gk {

/// Arithmetic of the finite Coxeter group W_X, precomputed once per (graph,
/// subset). Simples of the Artin monoid A_X biject with W_X elements through
/// their minimal lifts, so the whole Garside layer runs on these integer ids.
struct GarsideTable {
  const CoxeterGraph* graph = nullptr;
  GenSet subset = 0;
  std::vector<Gen> atoms;  // ascending global indices
  int size = 0;

  std::vector<Word> canon;  // id -> canonical reduced word (global letters)
  std::unordered_map<Word, int, WordHash> idOf;
  std::vector<int> len;
  std::vector<std::vector<int>> mulRight;  // [id][atomPos] = id of u*s
  std::vector<std::vector<int>> mulLeft;   // [id][atomPos] = id of s*u
  std::vector<int> invId;
  std::vector<GenSet> leftDesc, rightDesc;  // within-subset descent sets
  std::vector<int> tauId;   // conjugation by the longest element
  std::vector<int> compId;  // right complement: x * comp(x) = Delta
  int deltaId = 0;
  int deltaLen = 0;

  int atomPos(Gen g) const;
  int atomId(Gen g) const;
  int mul(int a, int b) const;
  int inv(int a) const { return invId[a]; }
  int tau(int a) const { return tauId[a]; }
  /// Prefix-order lattice (right weak order on W_X).
  int meet(int a, int b) const;
  int join(int a, int b) const;
  /// Suffix-order lattice, via the inverse antiautomorphism.
  int meetSuffix(int a, int b) const;
  int joinSuffix(int a, int b) const;
  bool isPrefix(int a, int b) const;  // a divides b on the left
  bool leftWeighted(int a, int b) const;
};

/// Delta-power plus left-weighted simple factors: the left normal form
/// Delta^p x_1 ... x_r. No factor is the identity or Delta and every adjacent
/// pair is left-weighted; operations keep this invariant.
struct GarsideElement {
  const CoxeterGraph* graph = nullptr;
  GenSet subset = 0;
  long long power = 0;
  std::vector<int> factors;

  bool isIdentity() const { return power == 0 && factors.empty(); }
  bool operator==(const GarsideElement& o) const {
    return graph == o.graph && subset == o.subset && power == o.power &&
           factors == o.factors;
  }
  bool operator!=(const GarsideElement& o) const { return !(*this == o); }
};

namespace garside {

/// Table for a spherical subset; memoized on the graph. Throws UsageError if
/// X is not spherical, CapError if |W_X| exceeds the lattice cap.
const GarsideTable& table(const CoxeterGraph& g, GenSet X);

GarsideElement identity(const CoxeterGraph& g, GenSet X);
GarsideElement deltaPower(const CoxeterGraph& g, GenSet X, long long p);
GarsideElement atom(const CoxeterGraph& g, GenSet X, Gen s, int sign = +1);

/// The join of all atoms; its Coxeter element is the longest element of W_X.
CoxeterElement deltaElement(const CoxeterGraph& g, GenSet X);

/// Left normal form of a signed word (letters must lie in X). With
/// `rightForm`, the factors of the right normal form are reported instead;
/// inf/sup/len are identical either way.
GarsideElement normalize(const ArtinWord& w, GenSet X);
GarsideElement fromPositive(const CoxeterGraph& g, GenSet X, const Word& w);

/// x_r' ... x_1' Delta^p; returned factor list is in product order.
struct RightNormalForm {
  long long power = 0;
  std::vector<int> factors;
};
RightNormalForm rightNormalForm(const GarsideElement& g);

/// Signed word representing g, read off the np form a^-1 b.
ArtinWord toWord(const GarsideElement& g);

GarsideElement mul(const GarsideElement& a, const GarsideElement& b);
GarsideElement inverse(const GarsideElement& a);
GarsideElement conjugate(const GarsideElement& g, const GarsideElement& by);  // by g by^-1

struct Profile {
  long long inf = 0, sup = 0, len = 0;
};
Profile profile(const GarsideElement& g);

/// np: g = a^-1 b, pn: g = a b^-1; both parts positive with trivial
/// prefix-gcd (np) resp. suffix-gcd (pn).
std::pair<GarsideElement, GarsideElement> mixedNp(const GarsideElement& g);
std::pair<GarsideElement, GarsideElement> mixedPn(const GarsideElement& g);

/// result = conjugator^-1 g conjugator, conjugator = Delta^p x_1 Delta^-p.
/// Requires at least one factor.
std::pair<GarsideElement, GarsideElement> cycling(const GarsideElement& g);

/// result = a g a^-1 for the np part a; positive and negative elements are
/// fixed points.
std::pair<GarsideElement, GarsideElement> swapOp(const GarsideElement& g);

struct Recurrence {
  GarsideElement witness;     // conjugator * g * conjugator^-1
  GarsideElement conjugator;
  std::vector<GarsideElement> circuit;
};
Recurrence recurrent(const GarsideElement& g);

/// Generators occurring in the np normal form; for positive elements this is
/// the letter set of every positive word.
GenSet support(const GarsideElement& g);

/// z_X = (s_1 ... s_n)^{k_Delta} for irreducible spherical X.
GarsideElement centerGenerator(const CoxeterGraph& g, GenSet X);
/// Componentwise product of the irreducible center generators.
GarsideElement centerGeneratorProduct(const CoxeterGraph& g, GenSet X);

/// g in A_Y, decided by support inclusion.
bool memberStandard(const GarsideElement& g, GenSet Y);

long long exponentSum(const GarsideElement& g);

/// Internal consistency of the normal form; throws std::logic_error.
void checkNormalForm(const GarsideElement& g);

}  // namespace garside
}  // namespace gk
