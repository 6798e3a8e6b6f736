#ifndef EQFIX_REPRESENTATION_HPP
#define EQFIX_REPRESENTATION_HPP

#include <memory>
#include <vector>

#include "eqfix/burnside.hpp"
#include "eqfix/group.hpp"
#include "eqfix/qmatrix.hpp"

namespace eqfix {

// A rational representation stored as one invertible matrix per group
// element, indexed like the group's element list.
struct RationalRepresentation {
  GroupRef group;
  int dimension;
  std::vector<QMat> images;
};

using RepRef = std::shared_ptr<const RationalRepresentation>;

// Extends generator images to the whole group along the closure tree, then
// verifies the result is a homomorphism. Throws SingularImageError for a
// singular generator image, InconsistentImagesError when the images do not
// satisfy the group's relations.
RepRef rep_from_generators(const GroupRef& group, int dimension,
                           const std::vector<QMat>& generator_images);

RepRef trivial_rep(const GroupRef& group, int dimension);

// The same matrices re-indexed over the promoted copy of h.
RepRef restrict_rep(const RepRef& rep, const Subgroup& h);

// Basis of the subspace fixed by every element of k, via the image of the
// averaging projector.
ColumnSpace fixed_subspace(const RationalRepresentation& rep, const Subgroup& k);

// A linear self map of the representation space commuting with the action;
// equivariance is checked on generators at construction.
class EquivariantLinearMap {
 public:
  EquivariantLinearMap(RepRef rep, QMat matrix);

  const RationalRepresentation& rep() const { return *rep_; }
  const RepRef& rep_ptr() const { return rep_; }
  const QMat& matrix() const { return matrix_; }

 private:
  RepRef rep_;
  QMat matrix_;
};

// Degree of the map induced on the representation sphere: the mark at a
// subgroup class is the sign of det restricted to that class's fixed
// subspace (+1 on a zero dimensional one), pulled back through the marks
// map. Throws SingularMapError when the matrix is singular.
BurnsideElement equivariant_degree(const EquivariantLinearMap& map);

QMat matrix_power(const QMat& a, int exponent);

// Iterate of an equivariant map under composition; the exponent must be at
// least 1.
EquivariantLinearMap matrix_power(const EquivariantLinearMap& map, int exponent);

}  // namespace eqfix

#endif
