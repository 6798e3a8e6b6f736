#include "eqfix/lefschetz.hpp"

#include <string>

#include "eqfix/errors.hpp"

namespace eqfix {

namespace {

int imat_rows(const IMat& m) { return static_cast<int>(m.size()); }

int imat_cols(const IMat& m) { return m.empty() ? 0 : static_cast<int>(m.front().size()); }

void check_rect(const IMat& m, const char* what) {
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != imat_cols(m))
      throw InputError(std::string(what) + ": ragged matrix");
}

IMat imat_mul(const IMat& a, const IMat& b) {
  IMat out(imat_rows(a), std::vector<Int>(imat_cols(b), Int(0)));
  for (int i = 0; i < imat_rows(a); ++i)
    for (int k = 0; k < imat_cols(a); ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < imat_cols(b); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

bool imat_is_zero(const IMat& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (e != 0) return false;
  return true;
}

}  // namespace

BurnsideElement lefschetz_from_orbits(const GroupRef& group,
                                      const std::vector<FixedOrbitDatum>& orbits) {
  if (!group) throw InputError("null group");
  BurnsideElement total = zero_element(group);
  for (const auto& orbit : orbits) {
    if (!same_group(orbit.isotropy.parent, group))
      throw GroupMismatchError("fixed orbit isotropy lives in a different group");
    PromotedSubgroup p = promote(orbit.isotropy);
    if (!same_group(orbit.slice()->group, p.group))
      throw GroupMismatchError("slice representation is not over the promoted isotropy group");
    const QMat& n = orbit.normal_derivative.matrix();
    EquivariantLinearMap displaced(orbit.slice(), QMat::identity(n.rows()) - n);
    total = add(total, induce(group, orbit.isotropy, equivariant_degree(displaced)));
  }
  return total;
}

BurnsideElement lefschetz_from_marks(const MarkVector& stratum_indices) {
  return from_marks(stratum_indices);
}

Int hopf_lefschetz(const ChainMapData& data) {
  for (std::size_t k = 0; k < data.maps.size(); ++k) {
    check_rect(data.maps[k], "chain map");
    if (imat_rows(data.maps[k]) != imat_cols(data.maps[k]) && imat_rows(data.maps[k]) != 0)
      throw InputError("chain map in degree " + std::to_string(k) + " is not square");
  }

  if (!data.boundaries.empty()) {
    if (data.boundaries.size() + 1 != data.maps.size())
      throw InputError("need one boundary matrix between consecutive chain degrees");
    for (std::size_t k = 0; k < data.boundaries.size(); ++k) {
      const IMat& d = data.boundaries[k];
      check_rect(d, "boundary");
      if (imat_rows(d) != imat_rows(data.maps[k]) ||
          (imat_rows(d) != 0 && imat_cols(d) != imat_rows(data.maps[k + 1])))
        throw InputError("boundary matrix shape does not match the chain ranks");
    }
    for (std::size_t k = 0; k + 1 < data.boundaries.size(); ++k)
      if (!imat_is_zero(imat_mul(data.boundaries[k], data.boundaries[k + 1])))
        throw ChainMapViolationError("boundary composed with boundary is nonzero");
    for (std::size_t k = 0; k < data.boundaries.size(); ++k)
      if (imat_mul(data.maps[k], data.boundaries[k]) != imat_mul(data.boundaries[k], data.maps[k + 1]))
        throw ChainMapViolationError("maps do not commute with the boundary");
  }

  Int total = 0;
  for (std::size_t k = 0; k < data.maps.size(); ++k) {
    Int tr = 0;
    for (int i = 0; i < imat_rows(data.maps[k]); ++i) tr += data.maps[k][i][i];
    if (k % 2 == 0)
      total += tr;
    else
      total -= tr;
  }
  return total;
}

RestrictionReport check_restriction(const GroupRef& group, const Subgroup& h,
                                    const BurnsideElement& invariant,
                                    const MarkVector& stratum_indices,
                                    bool assert_no_fixed_points_over_h) {
  if (!same_group(invariant.group, group))
    throw GroupMismatchError("invariant lives over a different group");
  if (!same_group(h.parent, group)) throw GroupMismatchError("subgroup of a different group");
  if (stratum_indices.values.size() != invariant.coeffs.size())
    throw InputError("stratum index count does not match class count");

  RestrictionReport report;
  MarkVector got = marks(invariant);
  report.mark_checks.reserve(got.values.size());
  bool marks_ok = true;
  for (std::size_t c = 0; c < got.values.size(); ++c) {
    bool match = got.values[c] == stratum_indices.values[c];
    report.mark_checks.push_back(match);
    marks_ok = marks_ok && match;
  }

  report.eta_value = eta(h, invariant);
  report.eta_is_zero = is_zero(report.eta_value);
  report.no_fixed_points_asserted = assert_no_fixed_points_over_h;
  report.eta_ok = !assert_no_fixed_points_over_h || report.eta_is_zero;
  report.ok = marks_ok && report.eta_ok;
  return report;
}

}  // namespace eqfix
