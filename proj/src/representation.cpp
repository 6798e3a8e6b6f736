#include "eqfix/representation.hpp"

#include "eqfix/errors.hpp"

namespace eqfix {

RepRef rep_from_generators(const GroupRef& group, int dimension,
                           const std::vector<QMat>& generator_images) {
  if (!group) throw InputError("null group");
  if (dimension < 0) throw InputError("negative representation dimension");
  if (generator_images.size() != group->generators().size())
    throw InputError("need exactly one image per group generator");
  for (const auto& m : generator_images) {
    if (m.rows() != dimension || m.cols() != dimension)
      throw InputError("generator image has the wrong shape");
    if (det(m) == 0) throw SingularImageError("generator image is singular");
  }

  auto rep = std::make_shared<RationalRepresentation>();
  rep->group = group;
  rep->dimension = dimension;
  rep->images.assign(group->order(), QMat());
  for (int i : group->bfs_order()) {
    if (group->word_prev(i) < 0)
      rep->images[i] = QMat::identity(dimension);
    else
      rep->images[i] = rep->images[group->word_prev(i)] * generator_images[group->word_gen(i)];
  }

  for (std::size_t k = 0; k < group->generators().size(); ++k) {
    int gk = group->element_index(group->generators()[k]);
    for (int i = 0; i < group->order(); ++i) {
      if (!(rep->images[i] * generator_images[k] == rep->images[group->mul(i, gk)]))
        throw InconsistentImagesError("generator images violate the group's relations");
    }
  }
  return rep;
}

RepRef trivial_rep(const GroupRef& group, int dimension) {
  if (!group) throw InputError("null group");
  if (dimension < 0) throw InputError("negative representation dimension");
  auto rep = std::make_shared<RationalRepresentation>();
  rep->group = group;
  rep->dimension = dimension;
  rep->images.assign(group->order(), QMat::identity(dimension));
  return rep;
}

RepRef restrict_rep(const RepRef& rep, const Subgroup& h) {
  if (!rep) throw InputError("null representation");
  if (!same_group(rep->group, h.parent))
    throw GroupMismatchError("restricting a representation to a subgroup of a different group");
  PromotedSubgroup p = promote(h);
  auto out = std::make_shared<RationalRepresentation>();
  out->group = p.group;
  out->dimension = rep->dimension;
  out->images.reserve(h.order());
  for (int m : h.members) out->images.push_back(rep->images[m]);
  return out;
}

ColumnSpace fixed_subspace(const RationalRepresentation& rep, const Subgroup& k) {
  if (!same_group(rep.group, k.parent))
    throw GroupMismatchError("fixed subspace of a subgroup of a different group");
  QMat sum(rep.dimension, rep.dimension);
  for (int m : k.members) sum = sum + rep.images[m];
  return column_space(make_rat(1, k.order()) * sum);
}

EquivariantLinearMap::EquivariantLinearMap(RepRef rep, QMat matrix)
    : rep_(std::move(rep)), matrix_(std::move(matrix)) {
  if (!rep_) throw InputError("null representation");
  if (matrix_.rows() != rep_->dimension || matrix_.cols() != rep_->dimension)
    throw InputError("map shape does not match the representation dimension");
  for (const auto& g : rep_->group->generators()) {
    const QMat& image = rep_->images[rep_->group->element_index(g)];
    if (!(matrix_ * image == image * matrix_))
      throw EquivarianceError("matrix does not commute with the group action");
  }
}

BurnsideElement equivariant_degree(const EquivariantLinearMap& map) {
  if (det(map.matrix()) == 0) throw SingularMapError("degree of a singular map");
  const GroupRef& group = map.rep().group;
  const SubgroupClassList& classes = subgroup_classes(group);

  MarkVector v{group, std::vector<Int>(classes.count())};
  for (int c = 0; c < classes.count(); ++c) {
    ColumnSpace fixed = fixed_subspace(map.rep(), classes.classes[c]);
    int dim = fixed.dimension();
    if (dim == 0) {
      v.values[c] = 1;
      continue;
    }
    QMat moved = map.matrix() * fixed.basis;
    QMat on_fixed(dim, dim);
    for (int j = 0; j < dim; ++j) {
      std::vector<Rat> column(moved.rows());
      for (int i = 0; i < moved.rows(); ++i) column[i] = moved.at(i, j);
      std::vector<Rat> coords = coords_in_basis(fixed, column);
      for (int i = 0; i < dim; ++i) on_fixed.at(i, j) = coords[i];
    }
    Rat d = det(on_fixed);
    if (d == 0) throw Error("invertible equivariant map restricted to a singular block");
    v.values[c] = d > 0 ? 1 : -1;
  }

  try {
    return from_marks(v);
  } catch (const NotInImageError&) {
    throw Error("degree marks failed to pull back through the table of marks");
  }
}

QMat matrix_power(const QMat& a, int exponent) {
  if (!a.is_square()) throw InputError("power of a non-square matrix");
  if (exponent < 0) throw InputError("negative matrix power");
  QMat result = QMat::identity(a.rows());
  QMat base = a;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

EquivariantLinearMap matrix_power(const EquivariantLinearMap& map, int exponent) {
  if (exponent < 1) throw InputError("map power needs a positive exponent");
  return EquivariantLinearMap(map.rep_ptr(), matrix_power(map.matrix(), exponent));
}

}  // namespace eqfix
