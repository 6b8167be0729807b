#ifndef UFX_CONSTRAINT_HPP
#define UFX_CONSTRAINT_HPP

#include <string>
#include <variant>
#include <vector>

#include "ufx/domain.hpp"
#include "ufx/explanation.hpp"
#include "ufx/ids.hpp"

namespace ufx {

// x != y
struct NeqVars {
  VarId x, y;
  bool operator==(const NeqVars&) const = default;
};
// x >= y + k
struct GeqPlus {
  VarId x, y;
  Value k = 0;
  bool operator==(const GeqPlus&) const = default;
};
// x != k
struct NeqConst {
  VarId x;
  Value k = 0;
  bool operator==(const NeqConst&) const = default;
};
// x == k
struct EqConst {
  VarId x;
  Value k = 0;
  bool operator==(const EqConst&) const = default;
};

using ConstraintKind = std::variant<NeqVars, GeqPlus, NeqConst, EqConst>;

struct Constraint {
  std::string name;
  ConstraintKind kind;
  bool is_decision = false;
  std::string owner_box;  // empty until attached to a hierarchy

  bool operator==(const Constraint&) const = default;
};

/// Total assignment, indexed by VarId.
struct Assignment {
  std::vector<Value> values;

  [[nodiscard]] Value at(VarId v) const;
  bool operator==(const Assignment&) const = default;
};

[[nodiscard]] std::vector<VarId> scope(const ConstraintKind& kind);

/// Checks the constraint's variables exist in `store` and unary constants
/// lie within the original bounds. Throws InputError otherwise.
void validate(const Constraint& c, const DomainStore& store);

[[nodiscard]] bool evaluate(const Constraint& c, const Assignment& assignment);

/// Human-readable form, e.g. "Mp >= Pm + 1".
[[nodiscard]] std::string describe(const ConstraintKind& kind, const DomainStore& store);

struct PendingRemoval {
  VarId var;
  Value value;
  Explanation explanation;

  bool operator==(const PendingRemoval&) const = default;
};

/// Removals mandated by one constraint against the current domains.
///
/// NeqVars prunes against singleton peers only; GeqPlus enforces bounds.
/// Bound prunings cite every removal of the peer strictly beyond its current
/// bound. The store must not contain an empty domain among the scope.
[[nodiscard]] std::vector<PendingRemoval> propagate_constraint(ConstraintId id, const Constraint& c,
                                                               const DomainStore& store);

}  // namespace ufx

#endif  // UFX_CONSTRAINT_HPP
