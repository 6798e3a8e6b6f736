#ifndef EQFIX_FULLER_HPP
#define EQFIX_FULLER_HPP

#include <vector>

#include "eqfix/burnside.hpp"
#include "eqfix/representation.hpp"

namespace eqfix {

// Local data of one periodic orbit: the spatial isotropy subgroup of a point
// on it, the linearized return map on a transversal slice (over the promoted
// isotropy group), and how many times the orbit winds relative to the chosen
// base period.
struct PeriodicOrbitDatum {
  Subgroup isotropy;
  EquivariantLinearMap poincare;
  int multiplicity = 1;
};

// Rational index of one orbit: the degree of (id - P^m) on the slice, induced
// up to the whole group, weighted by 1/m for the m-fold covering. Requires P
// hyperbolic enough that id - P^m is invertible (else SingularMapError).
RationalBurnsideElement fuller_single(const GroupRef& group, const PeriodicOrbitDatum& orbit);

RationalBurnsideElement fuller_sum(const GroupRef& group,
                                   const std::vector<PeriodicOrbitDatum>& orbits);

// True when the fixed point functor to W(h) does not kill the index, which
// certifies a periodic orbit whose orbit type contains a conjugate of h.
bool fuller_detect(const Subgroup& h, const RationalBurnsideElement& index);

}  // namespace eqfix

#endif
