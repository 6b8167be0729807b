#ifndef UFX_SOLVER_HPP
#define UFX_SOLVER_HPP

#include <deque>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ufx/constraint.hpp"
#include "ufx/domain.hpp"
#include "ufx/explain.hpp"

namespace ufx {

struct PropagationResult {
  std::optional<Contradiction> contradiction;

  [[nodiscard]] bool ok() const { return !contradiction; }
};

struct RepropagationReport {
  std::vector<DomainStore::Restored> restored;
  PropagationResult result;
};

struct Solution {
  Assignment assignment;
};
struct OverConstrained {
  Contradiction contradiction;
};
using SolveOutcome = std::variant<Solution, OverConstrained>;

/// Explanation-recording propagation engine.
///
/// Every removal carries an explanation; retracting a constraint undoes
/// exactly the removals citing it and re-propagates. Search posts
/// assignment decisions and repairs conflicts by retracting the most recent
/// decision of the nogood, recording the eliminating explanation
/// of the refuted value instead of backtracking chronologically.
///
/// Copyable: a copy is an independent snapshot.
class Solver {
 public:
  VarId add_variable(const VariableDecl& decl);

  /// Adds a fresh constraint, then runs propagation. On a contradiction,
  /// the state is left at the contradictory point.
  PropagationResult post(Constraint c);
  /// Reactivates a previously retracted constraint.
  PropagationResult repost(ConstraintId id);

  PropagationResult propagate();

  RepropagationReport retract(ConstraintId id);
  RepropagationReport retract(const std::string& name);
  /// Retracts (when active) and frees the name so it can be posted again.
  RepropagationReport discard(const std::string& name);

  /// Retracts every live decision; clears the search state left by the
  /// previous solve().
  PropagationResult clear_decisions();

  SolveOutcome solve();

  /// Posts an assignment decision and propagates. Used by solve(); exposed
  /// for tests and tooling that drive search by hand.
  PropagationResult decide(VarId var, Value value);
  /// Records the eliminating explanation of a refuted decision value. Does
  /// not propagate.
  RemovalOutcome record_elimination(Elimination elimination);

  [[nodiscard]] const DomainStore& store() const { return store_; }
  [[nodiscard]] std::span<const Constraint> constraints() const { return constraints_; }
  [[nodiscard]] const Constraint& constraint(ConstraintId id) const;
  [[nodiscard]] std::optional<ConstraintId> find(const std::string& name) const;
  [[nodiscard]] bool is_active(ConstraintId id) const;
  [[nodiscard]] std::vector<ConstraintId> active_constraints() const;
  [[nodiscard]] std::span<const ConstraintId> decisions() const { return decisions_; }
  [[nodiscard]] std::optional<Contradiction> current_contradiction() const;

 private:
  ConstraintId register_constraint(Constraint c);
  void enqueue(ConstraintId id);
  void enqueue_watchers(VarId var);
  void depropagate(ConstraintId id, std::vector<DomainStore::Restored>& restored);
  std::optional<Contradiction> commit(std::vector<PendingRemoval>& removals);
  ConstraintId post_decision(VarId var, Value value);

  DomainStore store_;
  std::vector<Constraint> constraints_;
  std::vector<bool> active_;
  std::vector<bool> bound_;  // false once discarded
  std::unordered_map<std::string, ConstraintId> by_name_;
  std::vector<std::vector<ConstraintId>> watchers_;  // per variable
  std::deque<ConstraintId> queue_;
  std::vector<bool> queued_;
  std::vector<ConstraintId> decisions_;  // posting order
  std::uint64_t decision_counter_ = 0;
};

}  // namespace ufx

#endif  // UFX_SOLVER_HPP
