#include "eqfix/group.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "eqfix/errors.hpp"

namespace eqfix {

namespace {

// Full multiplication tables are only worth the memory for small groups.
constexpr int kMulTableMaxOrder = 1024;

}  // namespace

FiniteGroup::FiniteGroup(int degree, std::vector<Permutation> generators, int order_cap)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree < 0) throw InputError("group degree must be nonnegative");
  if (order_cap < 1 || order_cap > kHardOrderCap)
    throw InputError("order cap must be between 1 and " + std::to_string(kHardOrderCap));
  for (const auto& g : generators_)
    if (g.degree() != degree) throw DegreeMismatchError("generator degree does not match group degree");

  std::map<Permutation, int> discovered;
  std::vector<Permutation> by_bfs;
  std::vector<int> prev_of, gen_of;
  by_bfs.push_back(Permutation::identity(degree));
  discovered.emplace(by_bfs[0], 0);
  prev_of.push_back(-1);
  gen_of.push_back(-1);
  for (std::size_t q = 0; q < by_bfs.size(); ++q) {
    for (int gi = 0; gi < static_cast<int>(generators_.size()); ++gi) {
      Permutation next = by_bfs[q] * generators_[gi];
      if (discovered.find(next) != discovered.end()) continue;
      if (static_cast<int>(by_bfs.size()) >= order_cap)
        throw OrderCapError("group order exceeds cap of " + std::to_string(order_cap));
      discovered.emplace(next, static_cast<int>(by_bfs.size()));
      by_bfs.push_back(std::move(next));
      prev_of.push_back(static_cast<int>(q));
      gen_of.push_back(gi);
    }
  }

  int n = static_cast<int>(by_bfs.size());
  std::vector<int> sorted_of_bfs(n);
  elements_.reserve(n);
  {
    int pos = 0;
    for (const auto& [perm, bfs] : discovered) {
      sorted_of_bfs[bfs] = pos++;
      elements_.push_back(perm);
    }
  }

  bfs_order_.resize(n);
  word_prev_.assign(n, -1);
  word_gen_.assign(n, -1);
  for (int b = 0; b < n; ++b) {
    bfs_order_[b] = sorted_of_bfs[b];
    if (b == 0) continue;
    word_prev_[sorted_of_bfs[b]] = sorted_of_bfs[prev_of[b]];
    word_gen_[sorted_of_bfs[b]] = gen_of[b];
  }

  inverse_.resize(n);
  for (int i = 0; i < n; ++i) inverse_[i] = element_index(elements_[i].inverse());

  if (n <= kMulTableMaxOrder) {
    mul_table_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        mul_table_[static_cast<std::size_t>(i) * n + j] = element_index(elements_[i] * elements_[j]);
  }
}

int FiniteGroup::element_index(const Permutation& p) const {
  int i = find_element(p);
  if (i < 0) throw InputError("permutation is not an element of the group");
  return i;
}

int FiniteGroup::find_element(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements_.begin());
}

int FiniteGroup::mul(int i, int j) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(i) * order() + j];
  return element_index(elements_[i] * elements_[j]);
}

GroupRef group_closure(int degree, std::vector<Permutation> generators, int order_cap) {
  return std::make_shared<const FiniteGroup>(degree, std::move(generators), order_cap);
}

bool same_group(const GroupRef& a, const GroupRef& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return a->degree() == b->degree() && a->elements() == b->elements();
}

bool Subgroup::contains(int element_index) const {
  return std::binary_search(members.begin(), members.end(), element_index);
}

bool same_subgroup(const Subgroup& a, const Subgroup& b) {
  return same_group(a.parent, b.parent) && a.members == b.members;
}

Subgroup make_subgroup(GroupRef parent, std::vector<int> members) {
  if (!parent) throw InputError("subgroup needs a parent group");
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw InputError("subgroup member list has duplicates");
  if (members.empty() || members.front() < 0 || members.back() >= parent->order())
    throw InputError("subgroup member index out of range");
  if (members.front() != 0) throw InputError("subgroup does not contain the identity");
  Subgroup h{std::move(parent), std::move(members)};
  for (int a : h.members)
    for (int b : h.members)
      if (!h.contains(h.parent->mul(a, b))) throw InputError("member set is not closed under products");
  return h;
}

Subgroup subgroup_from_generators(GroupRef parent, const std::vector<int>& generator_indices) {
  if (!parent) throw InputError("subgroup needs a parent group");
  int n = parent->order();
  for (int g : generator_indices)
    if (g < 0 || g >= n) throw InputError("subgroup generator index out of range");
  std::vector<char> in(n, 0);
  std::vector<int> queue{0};
  in[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (int g : generator_indices) {
      int next = parent->mul(queue[q], g);
      if (!in[next]) {
        in[next] = 1;
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return Subgroup{std::move(parent), std::move(queue)};
}

Subgroup trivial_subgroup(GroupRef parent) {
  if (!parent) throw InputError("subgroup needs a parent group");
  return Subgroup{std::move(parent), {0}};
}

Subgroup full_subgroup(GroupRef parent) {
  if (!parent) throw InputError("subgroup needs a parent group");
  std::vector<int> all(parent->order());
  for (int i = 0; i < static_cast<int>(all.size()); ++i) all[i] = i;
  return Subgroup{std::move(parent), std::move(all)};
}

Subgroup conjugate_subgroup(const Subgroup& h, int g_index) {
  const auto& g = *h.parent;
  if (g_index < 0 || g_index >= g.order()) throw InputError("conjugating element index out of range");
  int gi = g.inv(g_index);
  std::vector<int> members;
  members.reserve(h.members.size());
  for (int m : h.members) members.push_back(g.mul(g.mul(g_index, m), gi));
  std::sort(members.begin(), members.end());
  return Subgroup{h.parent, std::move(members)};
}

Subgroup normalizer(const Subgroup& h) {
  const auto& g = *h.parent;
  std::vector<int> members;
  for (int x = 0; x < g.order(); ++x) {
    int xi = g.inv(x);
    bool normalizes = true;
    for (int m : h.members) {
      if (!h.contains(g.mul(g.mul(x, m), xi))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) members.push_back(x);
  }
  return Subgroup{h.parent, std::move(members)};
}

namespace {

// Labels the cosets {x h : h in H} of h among the given ambient members by
// ascending least element, and returns the label of each parent element's
// coset (-1 for elements outside the ambient set).
struct CosetLabels {
  std::vector<int> least_of;    // parent element -> least element of its coset
  std::vector<int> label_of;    // parent element -> coset label
  std::vector<int> reps;        // coset label -> least element
};

CosetLabels label_cosets(const Subgroup& h, const std::vector<int>& ambient) {
  const auto& g = *h.parent;
  CosetLabels out;
  out.least_of.assign(g.order(), -1);
  out.label_of.assign(g.order(), -1);
  for (int x : ambient) {
    if (out.least_of[x] >= 0) continue;
    int least = g.order();
    for (int m : h.members) least = std::min(least, g.mul(x, m));
    for (int m : h.members) out.least_of[g.mul(x, m)] = least;
  }
  for (int x : ambient)
    if (out.least_of[x] == x) out.reps.push_back(x);
  std::sort(out.reps.begin(), out.reps.end());
  for (int label = 0; label < static_cast<int>(out.reps.size()); ++label) {
    int rep = out.reps[label];
    for (int m : h.members) out.label_of[g.mul(rep, m)] = label;
  }
  return out;
}

}  // namespace

WeylGroup weyl_group(const Subgroup& h) {
  Subgroup n = normalizer(h);
  const auto& g = *h.parent;
  CosetLabels cosets = label_cosets(h, n.members);
  int m = static_cast<int>(cosets.reps.size());

  auto coset_perm = [&](int x) {
    std::vector<int> images(m);
    for (int j = 0; j < m; ++j) images[j] = cosets.label_of[g.mul(x, cosets.reps[j])];
    return Permutation(std::move(images));
  };

  std::vector<Permutation> distinct;
  distinct.reserve(m);
  for (int rep : cosets.reps) distinct.push_back(coset_perm(rep));
  std::vector<Permutation> gens;
  for (const auto& p : distinct)
    if (!p.is_identity()) gens.push_back(p);

  WeylGroup w;
  w.subgroup = h;
  w.normalizer = n;
  w.group = std::make_shared<const FiniteGroup>(m, std::move(gens), std::max(m, 1));
  if (w.group->order() != m) throw Error("coset permutations did not close to the quotient order");

  w.quotient_map.resize(n.members.size());
  for (std::size_t k = 0; k < n.members.size(); ++k)
    w.quotient_map[k] = w.group->element_index(coset_perm(n.members[k]));
  w.section.assign(m, -1);
  for (std::size_t k = 0; k < n.members.size(); ++k)
    if (w.section[w.quotient_map[k]] < 0) w.section[w.quotient_map[k]] = static_cast<int>(k);
  return w;
}

bool is_subconjugate(const Subgroup& a, const Subgroup& b) {
  if (!same_group(a.parent, b.parent))
    throw GroupMismatchError("subconjugacy needs subgroups of the same group");
  if (a.order() > b.order()) return false;
  const auto& g = *a.parent;
  for (int x = 0; x < g.order(); ++x) {
    int xi = g.inv(x);
    bool inside = true;
    for (int m : a.members) {
      if (!b.contains(g.mul(g.mul(x, m), xi))) {
        inside = false;
        break;
      }
    }
    if (inside) return true;
  }
  return false;
}

GSetAction coset_action(const Subgroup& h) {
  const auto& g = *h.parent;
  std::vector<int> everyone(g.order());
  for (int i = 0; i < g.order(); ++i) everyone[i] = i;
  CosetLabels cosets = label_cosets(h, everyone);
  int m = static_cast<int>(cosets.reps.size());

  GSetAction out;
  out.group = h.parent;
  out.point_labels = cosets.reps;
  out.action.reserve(g.order());
  for (int i = 0; i < g.order(); ++i) {
    std::vector<int> images(m);
    for (int j = 0; j < m; ++j) images[j] = cosets.label_of[g.mul(i, cosets.reps[j])];
    out.action.emplace_back(std::move(images));
  }
  return out;
}

PromotedSubgroup promote(const Subgroup& h, const std::vector<int>& generator_members) {
  const auto& g = *h.parent;
  int n = h.order();
  auto position = [&](int member) {
    auto it = std::lower_bound(h.members.begin(), h.members.end(), member);
    if (it == h.members.end() || *it != member)
      throw InputError("element is not a member of the subgroup");
    return static_cast<int>(it - h.members.begin());
  };

  auto regular_perm = [&](int member) {
    std::vector<int> images(n);
    for (int q = 0; q < n; ++q) images[q] = position(g.mul(member, h.members[q]));
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  gens.reserve(generator_members.size());
  for (int gm : generator_members) gens.push_back(regular_perm(gm));

  PromotedSubgroup out;
  out.source = h;
  out.group = std::make_shared<const FiniteGroup>(n, std::move(gens), std::max(n, 1));
  if (out.group->order() != n)
    throw InputError("given generators do not generate the subgroup");
  // Sorted regular permutations follow the member order, so element i of the
  // promoted group is parent element members[i]. Everything downstream leans
  // on this, so verify it.
  for (int i = 0; i < n; ++i)
    if (out.group->element(i)(0) != i) throw Error("regular realization broke member order");
  return out;
}

PromotedSubgroup promote(const Subgroup& h) {
  std::vector<int> gens(h.members.begin() + 1, h.members.end());
  return promote(h, gens);
}

}  // namespace eqfix
