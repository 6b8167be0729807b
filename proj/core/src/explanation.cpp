#include "ufx/explanation.hpp"

#include <algorithm>
#include <iterator>

namespace ufx {

Explanation::Explanation(std::initializer_list<ConstraintId> ids)
    : Explanation(std::vector<ConstraintId>(ids)) {}

Explanation::Explanation(std::vector<ConstraintId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

void Explanation::insert(ConstraintId id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) ids_.insert(it, id);
}

void Explanation::merge(const Explanation& other) {
  if (other.ids_.empty()) return;
  std::vector<ConstraintId> out;
  out.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out));
  ids_ = std::move(out);
}

bool Explanation::erase(ConstraintId id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return false;
  ids_.erase(it);
  return true;
}

bool Explanation::contains(ConstraintId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

}  // namespace ufx
