#ifndef EQFIX_SRC_CACHE_HPP
#define EQFIX_SRC_CACHE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "eqfix/group.hpp"

namespace eqfix {

// Per-group memo for expensive derived structures (subgroup classes, table of
// marks). Keyed by the group's address with a weak_ptr guard so a recycled
// address never serves a stale value.
template <typename Value>
class PerGroupCache {
 public:
  template <typename Compute>
  std::shared_ptr<const Value> get_or_compute(const GroupRef& group, Compute&& compute) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = entries_.find(group.get());
      if (it != entries_.end() && it->second.first.lock() == group) return it->second.second;
    }
    auto value = std::make_shared<const Value>(compute());
    std::lock_guard<std::mutex> lock(mutex_);
    entries_[group.get()] = {std::weak_ptr<const FiniteGroup>(group), value};
    return value;
  }

 private:
  std::mutex mutex_;
  std::map<const FiniteGroup*, std::pair<std::weak_ptr<const FiniteGroup>, std::shared_ptr<const Value>>>
      entries_;
};

}  // namespace eqfix

#endif
