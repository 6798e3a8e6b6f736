#ifndef EQFIX_BURNSIDE_HPP
#define EQFIX_BURNSIDE_HPP

#include <string>
#include <vector>

#include "eqfix/group.hpp"
#include "eqfix/rational.hpp"

namespace eqfix {

// marks[i][j] counts the cosets of classes[j] fixed by classes[i], where
// classes run in the canonical ascending order of subgroup_classes. That
// order makes the table upper triangular with the Weyl group orders on the
// diagonal.
struct TableOfMarks {
  GroupRef group;
  std::vector<std::vector<Int>> marks;

  int size() const { return static_cast<int>(marks.size()); }
};

// Cached per group.
const TableOfMarks& table_of_marks(const GroupRef& group);

// Element of the Burnside ring, written in the basis of transitive actions
// [G/H_c] indexed by subgroup class c.
struct BurnsideElement {
  GroupRef group;
  std::vector<Int> coeffs;
};

// Fixed point counts per subgroup class, i.e. the image of an element under
// the marks map.
struct MarkVector {
  GroupRef group;
  std::vector<Int> values;
};

struct RationalBurnsideElement {
  GroupRef group;
  std::vector<Rat> coeffs;
};

BurnsideElement zero_element(const GroupRef& group);
BurnsideElement basis_element(const GroupRef& group, int class_index);
// The multiplicative unit [G/G] (always the last class).
BurnsideElement unit_element(const GroupRef& group);

BurnsideElement add(const BurnsideElement& x, const BurnsideElement& y);
BurnsideElement negate(const BurnsideElement& x);
bool equal(const BurnsideElement& x, const BurnsideElement& y);
bool is_zero(const BurnsideElement& x);

// The injective ring homomorphism into the product of integers: value at
// class c is the number of H_c-fixed points.
MarkVector marks(const BurnsideElement& x);

// Inverse of the marks map on its image; solved exactly by back substitution
// down the triangular table. Throws NotInImageError when the vector is not
// the mark vector of any element.
BurnsideElement from_marks(const MarkVector& v);

// Product routed through marks: multiply fixed point counts pointwise, pull
// back. A pullback failure here means the table itself is broken, so it
// surfaces as Error, not NotInImageError.
BurnsideElement mul(const BurnsideElement& x, const BurnsideElement& y);

// Decomposes a finite G-set into transitive pieces. The action must assign a
// permutation to every group element, homomorphically; validated.
BurnsideElement gset_to_element(const GSetAction& action);

// Induction along H <= G on basis elements: the H-set H/K becomes G/K. The
// element must live over the promoted copy of h.
BurnsideElement induce(const GroupRef& g, const Subgroup& h, const BurnsideElement& x);

// Restriction of a G-element to a subgroup, landing over its promoted copy.
BurnsideElement restrict_to(const Subgroup& h, const BurnsideElement& x);

// The fixed point functor into the Burnside ring of the Weyl group:
// [G/K] goes to the W(H)-set of H-fixed cosets of G/K.
BurnsideElement eta(const WeylGroup& w, const BurnsideElement& x);
BurnsideElement eta(const Subgroup& h, const BurnsideElement& x);

RationalBurnsideElement to_rational(const BurnsideElement& x);
RationalBurnsideElement rational_zero(const GroupRef& group);
RationalBurnsideElement rational_add(const RationalBurnsideElement& x, const RationalBurnsideElement& y);
RationalBurnsideElement rational_scale(const Rat& s, const RationalBurnsideElement& x);
RationalBurnsideElement rational_eta(const WeylGroup& w, const RationalBurnsideElement& x);
bool rational_is_zero(const RationalBurnsideElement& x);

// "[G/H2] - 3*[G/H0]" style rendering; the zero element prints as "0".
std::string format_element(const BurnsideElement& x);
std::string format_element(const RationalBurnsideElement& x);
// "(1, -2, 0)" style rendering.
std::string format_marks(const MarkVector& v);

}  // namespace eqfix

#endif
