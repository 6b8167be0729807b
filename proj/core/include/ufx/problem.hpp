#ifndef UFX_PROBLEM_HPP
#define UFX_PROBLEM_HPP

#include <string>
#include <vector>

#include "ufx/domain.hpp"
#include "ufx/hierarchy.hpp"

namespace ufx {

/// A complete model: variables, the constraint hierarchy, and the named
/// user views. Constraint VarIds index into `variables`.
struct Problem {
  std::string name;
  std::vector<VariableDecl> variables;
  BoxSpec hierarchy;
  std::vector<Cut> views;

  [[nodiscard]] const Cut* view(const std::string& name) const;
  /// All constraints in posting (preorder) order, owner_box filled in.
  [[nodiscard]] std::vector<Constraint> constraints() const;
  /// A fresh solver with every variable declared and every constraint posted.
  [[nodiscard]] Solver make_solver() const;

  bool operator==(const Problem&) const = default;
};

}  // namespace ufx

#endif  // UFX_PROBLEM_HPP
