#pragma once

#include "garsidekit/oracle.hpp"
#include "garsidekit/parabolic.hpp"

namespace gk {
namespace even {

/// Canonical retraction of an even Artin group onto A_X: delete the letters
/// outside X, keeping signs. Errors when the ambient has an odd label.
ArtinWord rho(const ArtinWord& w, GenSet X);

struct ReduceResult {
  ArtinWord x, y;  // x = rho_X(f^-1 g), y = rho_Y((f^-1 g)^-1 x)
  GenSet core = 0;           // X intersect Y
  bool certifiedTrivial = false;  // core empty => intersection is {1}
};

/// The intersection-reduction witnesses:
///   f A_X f^-1  cap  g A_Y g^-1  =  f x A_core x^-1 f^-1  cap  g y A_core y^-1 g^-1.
ReduceResult intersectReduce(const ArtinWord& f, GenSet X, const ArtinWord& g,
                             GenSet Y);

enum class Containment { Equal, Incomparable };

struct ContainmentReport {
  Containment verdict = Containment::Incomparable;
  bool certified = false;  // every ball membership test was decided
  long long checked = 0;
  long long undecided = 0;
};

/// Desk-scale check of g A_X g^-1 vs h A_X h^-1: containment of one conjugate
/// in the other forces equality (via the rho collapse), so a fully certified
/// ball scan answers Equal; a refuted membership answers Incomparable.
ContainmentReport conjugateContainment(const ArtinWord& g, const ArtinWord& h,
                                       GenSet X, int radius);

}  // namespace even
}  // namespace gk
