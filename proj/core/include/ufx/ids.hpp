#ifndef UFX_IDS_HPP
#define UFX_IDS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace ufx {

struct VarId {
  std::uint32_t index = 0;
  auto operator<=>(const VarId&) const = default;
};

// Dense handle into a solver's constraint table. Decisions get ids too.
struct ConstraintId {
  std::uint32_t index = 0;
  auto operator<=>(const ConstraintId&) const = default;
};

using Value = int;

}  // namespace ufx

template <>
struct std::hash<ufx::VarId> {
  std::size_t operator()(ufx::VarId v) const noexcept { return v.index; }
};

template <>
struct std::hash<ufx::ConstraintId> {
  std::size_t operator()(ufx::ConstraintId c) const noexcept { return c.index; }
};

#endif  // UFX_IDS_HPP
