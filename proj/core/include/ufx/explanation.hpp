#ifndef UFX_EXPLANATION_HPP
#define UFX_EXPLANATION_HPP

#include <initializer_list>
#include <span>
#include <vector>

#include "ufx/ids.hpp"

namespace ufx {

/// A flat set of constraint ids justifying a removal or a contradiction.
///
/// Kept as a sorted vector: explanations are small and get unioned far more
/// often than they are probed.
class Explanation {
 public:
  Explanation() = default;
  Explanation(std::initializer_list<ConstraintId> ids);
  explicit Explanation(std::vector<ConstraintId> ids);

  void insert(ConstraintId id);
  void merge(const Explanation& other);
  bool erase(ConstraintId id);

  [[nodiscard]] bool contains(ConstraintId id) const;
  [[nodiscard]] bool empty() const { return ids_.empty(); }
  [[nodiscard]] std::size_t size() const { return ids_.size(); }
  [[nodiscard]] std::span<const ConstraintId> ids() const { return ids_; }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  bool operator==(const Explanation&) const = default;

 private:
  std::vector<ConstraintId> ids_;
};

}  // namespace ufx

#endif  // UFX_EXPLANATION_HPP
