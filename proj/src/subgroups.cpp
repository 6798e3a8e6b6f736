#include <algorithm>
#include <numeric>
#include <set>

#include "cache.hpp"
#include "eqfix/errors.hpp"
#include "eqfix/group.hpp"

namespace eqfix {

namespace {

// Closure of a member set under the group operation, as a sorted index list.
std::vector<int> close_members(const FiniteGroup& g, std::vector<int> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> queue;
  queue.reserve(seed.size() + 1);
  in[0] = 1;
  queue.push_back(0);
  for (int s : seed) {
    if (!in[s]) {
      in[s] = 1;
      queue.push_back(s);
    }
  }
  std::vector<int> gens = queue;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (int s : gens) {
      int next = g.mul(queue[q], s);
      if (!in[next]) {
        in[next] = 1;
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Every subgroup of the group, as sorted member lists. Each subgroup is a
// join of cyclic subgroups, so closing the cyclic ones under pairwise join
// reaches all of them.
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> subs;
  auto add = [&](std::vector<int> members) {
    if (seen.insert(members).second) subs.push_back(std::move(members));
  };

  add({0});
  for (int i = 1; i < g.order(); ++i) {
    std::vector<int> cyc{0};
    for (int j = i; j != 0; j = g.mul(j, i)) cyc.push_back(j);
    std::sort(cyc.begin(), cyc.end());
    add(std::move(cyc));
  }

  std::vector<int> divisors;
  for (int d = 1; d <= g.order(); ++d)
    if (g.order() % d == 0) divisors.push_back(d);

  std::vector<int> everyone(g.order());
  std::iota(everyone.begin(), everyone.end(), 0);

  for (std::size_t i = 1; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto& a = subs[i];
      const auto& b = subs[j];
      if (subset_of(a, b) || subset_of(b, a)) continue;
      // The join's order is a multiple of lcm(|a|,|b|) dividing |g|; when the
      // only candidate is |g| itself, skip the closure.
      long long l = std::lcm(static_cast<long long>(a.size()), static_cast<long long>(b.size()));
      bool forced_full = true;
      for (int d : divisors)
        if (d < g.order() && d % l == 0 && d > static_cast<int>(std::max(a.size(), b.size()))) {
          forced_full = false;
          break;
        }
      if (forced_full) {
        add(everyone);
        continue;
      }
      std::vector<int> seed;
      seed.reserve(a.size() + b.size());
      std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(seed));
      seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
      add(close_members(g, std::move(seed)));
    }
  }
  return subs;
}

SubgroupClassList build_classes(const GroupRef& group) {
  const auto& g = *group;
  std::vector<std::vector<int>> subs = all_subgroups(g);

  std::set<std::vector<int>> unclassified(subs.begin(), subs.end());
  struct RawClass {
    std::vector<int> rep;
    std::vector<std::vector<int>> orbit;
  };
  std::vector<RawClass> raw;
  for (const auto& s : subs) {
    if (unclassified.find(s) == unclassified.end()) continue;
    RawClass cls;
    std::set<std::vector<int>> orbit;
    for (int x = 0; x < g.order(); ++x) {
      int xi = g.inv(x);
      std::vector<int> conj;
      conj.reserve(s.size());
      for (int m : s) conj.push_back(g.mul(g.mul(x, m), xi));
      std::sort(conj.begin(), conj.end());
      orbit.insert(std::move(conj));
    }
    cls.rep = *orbit.begin();
    for (const auto& member_list : orbit) {
      unclassified.erase(member_list);
      cls.orbit.push_back(member_list);
    }
    raw.push_back(std::move(cls));
  }

  std::sort(raw.begin(), raw.end(), [](const RawClass& a, const RawClass& b) {
    if (a.rep.size() != b.rep.size()) return a.rep.size() < b.rep.size();
    return a.rep < b.rep;
  });

  SubgroupClassList out;
  out.group = group;
  for (int c = 0; c < static_cast<int>(raw.size()); ++c) {
    out.classes.push_back(Subgroup{group, raw[c].rep});
    for (auto& member_list : raw[c].orbit) out.index_by_members.emplace(std::move(member_list), c);
  }
  return out;
}

PerGroupCache<SubgroupClassList>& class_cache() {
  static PerGroupCache<SubgroupClassList> cache;
  return cache;
}

}  // namespace

int SubgroupClassList::class_of(const Subgroup& h) const {
  if (!same_group(h.parent, group))
    throw GroupMismatchError("subgroup belongs to a different group");
  auto it = index_by_members.find(h.members);
  if (it == index_by_members.end()) throw InputError("member set is not a subgroup of the group");
  return it->second;
}

const SubgroupClassList& subgroup_classes(const GroupRef& group) {
  if (!group) throw InputError("null group");
  return *class_cache().get_or_compute(group, [&] { return build_classes(group); });
}

}  // namespace eqfix
