#ifndef EQFIX_GROUP_HPP
#define EQFIX_GROUP_HPP

#include <map>
#include <memory>
#include <vector>

#include "eqfix/permutation.hpp"

namespace eqfix {

inline constexpr int kDefaultOrderCap = 200;
inline constexpr int kHardOrderCap = 2000;

// A finite permutation group, stored by its full element list. Elements are
// sorted lexicographically, so the identity is always element 0. The closure
// is computed breadth-first from the generators; the discovery tree is kept
// (bfs_order / word_prev / word_gen) so that homomorphisms defined on the
// generators can be propagated to every element:
//
//   element(i) == element(word_prev(i)) * generator(word_gen(i))
//
// for every non-identity i, and bfs_order() lists indices so that word_prev
// of each entry appears earlier.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  // Closes the generating set. Throws OrderCapError if the closure grows past
  // order_cap, InputError for degree mismatches or a cap outside
  // [1, kHardOrderCap].
  FiniteGroup(int degree, std::vector<Permutation> generators, int order_cap = kDefaultOrderCap);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(int i) const { return elements_[i]; }

  // Index of p in the sorted element list; throws InputError if absent.
  int element_index(const Permutation& p) const;
  // Same lookup, returning -1 instead of throwing.
  int find_element(const Permutation& p) const;

  int mul(int i, int j) const;
  int inv(int i) const { return inverse_[i]; }

  const std::vector<int>& bfs_order() const { return bfs_order_; }
  int word_prev(int i) const { return word_prev_[i]; }
  int word_gen(int i) const { return word_gen_[i]; }

 private:
  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<int> inverse_;
  std::vector<int> bfs_order_;
  std::vector<int> word_prev_;
  std::vector<int> word_gen_;
  // Full multiplication table, built only for small groups; mul() falls back
  // to composing permutations otherwise.
  std::vector<int> mul_table_;
};

using GroupRef = std::shared_ptr<const FiniteGroup>;

GroupRef group_closure(int degree, std::vector<Permutation> generators,
                       int order_cap = kDefaultOrderCap);

// Equality as sets of permutations; generator lists are ignored, so groups
// closed from different generating sets compare equal.
bool same_group(const GroupRef& a, const GroupRef& b);

// A subgroup, stored as the sorted list of parent element indices. Always
// contains index 0 (the identity).
struct Subgroup {
  GroupRef parent;
  std::vector<int> members;

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int element_index) const;
};

bool same_subgroup(const Subgroup& a, const Subgroup& b);

// Validates closure; throws InputError if members do not form a subgroup.
Subgroup make_subgroup(GroupRef parent, std::vector<int> members);
Subgroup subgroup_from_generators(GroupRef parent, const std::vector<int>& generator_indices);
Subgroup trivial_subgroup(GroupRef parent);
Subgroup full_subgroup(GroupRef parent);
Subgroup conjugate_subgroup(const Subgroup& h, int g_index);

Subgroup normalizer(const Subgroup& h);

// Conjugacy classes of subgroups in canonical order: ascending subgroup
// order, ties broken by the lexicographically least member list occurring in
// the class. classes[c] is that least member list, so the first class is the
// trivial subgroup and the last is the whole group.
struct SubgroupClassList {
  GroupRef group;
  std::vector<Subgroup> classes;
  // Member list -> class, for every subgroup of the group.
  std::map<std::vector<int>, int> index_by_members;

  int count() const { return static_cast<int>(classes.size()); }
  int class_of(const Subgroup& h) const;
};

// Enumerates every subgroup (all cyclic subgroups, then closure under
// pairwise join) and buckets them into conjugacy classes. Cached per group.
const SubgroupClassList& subgroup_classes(const GroupRef& group);

// W(H) = N(H)/H realized as the permutation group of the left translation
// action on the cosets of H in N(H). quotient_map[k] is the element index in
// `group` of the coset permutation of normalizer.members[k]; section[w] is
// one such k per element w of the quotient (the least).
struct WeylGroup {
  Subgroup subgroup;
  Subgroup normalizer;
  GroupRef group;
  std::vector<int> quotient_map;
  std::vector<int> section;
};

WeylGroup weyl_group(const Subgroup& h);

// True if some conjugate of a is contained in b. Both must share a parent.
bool is_subconjugate(const Subgroup& a, const Subgroup& b);

// Left translation action of the whole parent group on the cosets of a
// subgroup. Cosets are labelled 0..n-1 in order of their least element index,
// so coset 0 is the subgroup itself; point_labels[c] is that least index.
// action[i] is the coset permutation of parent element i.
struct GSetAction {
  GroupRef group;
  std::vector<int> point_labels;
  std::vector<Permutation> action;
};

GSetAction coset_action(const Subgroup& h);

// A subgroup made into a standalone group via its left regular realization on
// its own member list. Element i of `group` corresponds to parent element
// source.members[i]; this index compatibility is what induction, restriction
// and representation restriction rely on.
struct PromotedSubgroup {
  Subgroup source;
  GroupRef group;
};

// generator_members must generate the subgroup (checked); they become the
// promoted group's generator list verbatim.
PromotedSubgroup promote(const Subgroup& h, const std::vector<int>& generator_members);
// Convenience overload generating from every non-identity member.
PromotedSubgroup promote(const Subgroup& h);

}  // namespace eqfix

#endif
