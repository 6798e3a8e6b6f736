#include "eqfix/fuller.hpp"

#include "eqfix/errors.hpp"

namespace eqfix {

RationalBurnsideElement fuller_single(const GroupRef& group, const PeriodicOrbitDatum& orbit) {
  if (!group) throw InputError("null group");
  if (orbit.multiplicity < 1) throw InputError("orbit multiplicity must be at least 1");
  if (!same_group(orbit.isotropy.parent, group))
    throw GroupMismatchError("periodic orbit isotropy lives in a different group");
  PromotedSubgroup p = promote(orbit.isotropy);
  if (!same_group(orbit.poincare.rep().group, p.group))
    throw GroupMismatchError("return map is not over the promoted isotropy group");

  EquivariantLinearMap iterated = matrix_power(orbit.poincare, orbit.multiplicity);
  EquivariantLinearMap displaced(orbit.poincare.rep_ptr(),
                                 QMat::identity(iterated.matrix().rows()) - iterated.matrix());
  BurnsideElement local = equivariant_degree(displaced);
  return rational_scale(make_rat(1, orbit.multiplicity),
                        to_rational(induce(group, orbit.isotropy, local)));
}

RationalBurnsideElement fuller_sum(const GroupRef& group,
                                   const std::vector<PeriodicOrbitDatum>& orbits) {
  RationalBurnsideElement total = rational_zero(group);
  for (const auto& orbit : orbits) total = rational_add(total, fuller_single(group, orbit));
  return total;
}

bool fuller_detect(const Subgroup& h, const RationalBurnsideElement& index) {
  if (!same_group(h.parent, index.group))
    throw GroupMismatchError("detection subgroup lives in a different group");
  return !rational_is_zero(rational_eta(weyl_group(h), index));
}

}  // namespace eqfix
