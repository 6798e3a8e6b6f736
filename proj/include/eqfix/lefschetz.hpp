#ifndef EQFIX_LEFSCHETZ_HPP
#define EQFIX_LEFSCHETZ_HPP

#include <vector>

#include "eqfix/burnside.hpp"
#include "eqfix/representation.hpp"

namespace eqfix {

// Local data of one fixed orbit of an equivariant map: the isotropy subgroup
// of a point on the orbit and the derivative of the map transverse to the
// orbit, acting on the slice representation of the isotropy group. The slice
// lives over the promoted copy of the isotropy subgroup.
struct FixedOrbitDatum {
  Subgroup isotropy;
  EquivariantLinearMap normal_derivative;

  const RepRef& slice() const { return normal_derivative.rep_ptr(); }
};

// Assembles the equivariant fixed point index from local data: each orbit
// contributes the degree of (id - derivative) on its slice, induced up from
// the isotropy group, and the contributions add. Every fixed orbit must be
// nondegenerate (id - derivative invertible), or SingularMapError.
BurnsideElement lefschetz_from_orbits(const GroupRef& group,
                                      const std::vector<FixedOrbitDatum>& orbits);

// Recovers the invariant from the classical fixed point indices of the maps
// induced on each fixed point stratum, one integer per subgroup class.
BurnsideElement lefschetz_from_marks(const MarkVector& stratum_indices);

// Integer matrices of a cellular self map, one square matrix per chain
// degree, plus optionally the boundary matrices. boundaries[k] is the matrix
// of the boundary from degree k+1 to degree k (columns indexed by degree k+1
// cells), so there is one fewer boundary than chain degrees.
using IMat = std::vector<std::vector<Int>>;

struct ChainMapData {
  std::vector<IMat> maps;
  std::vector<IMat> boundaries;
};

// Alternating sum of traces. When boundaries are supplied, first checks that
// they square to zero and that the maps commute with them, throwing
// ChainMapViolationError otherwise.
Int hopf_lefschetz(const ChainMapData& data);

// Consistency report between a computed invariant and independently known
// stratum data for one subgroup: the mark at each class against the given
// classical indices, and the image under the fixed point functor to the Weyl
// group, which must vanish when the caller asserts that no fixed point has
// orbit type containing a conjugate of h.
struct RestrictionReport {
  std::vector<bool> mark_checks;
  BurnsideElement eta_value;
  bool eta_is_zero = false;
  bool no_fixed_points_asserted = false;
  bool eta_ok = false;
  bool ok = false;
};

RestrictionReport check_restriction(const GroupRef& group, const Subgroup& h,
                                    const BurnsideElement& invariant,
                                    const MarkVector& stratum_indices,
                                    bool assert_no_fixed_points_over_h = false);

}  // namespace eqfix

#endif
