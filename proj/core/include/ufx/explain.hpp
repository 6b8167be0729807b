#ifndef UFX_EXPLAIN_HPP
#define UFX_EXPLAIN_HPP

#include <span>

#include "ufx/constraint.hpp"
#include "ufx/domain.hpp"
#include "ufx/explanation.hpp"

namespace ufx {

// Explanation algebra. `constraints` is a constraint table indexed by
// ConstraintId, used only to tell decisions apart from problem constraints.

struct Contradiction {
  VarId emptied_variable;
  Explanation explanation;
  Explanation decisions;  // members of `explanation` flagged is_decision
};

/// Nogood for an emptied domain: the union of the explanations of every
/// original value of `var`.
[[nodiscard]] Contradiction contradiction_explanation(const DomainStore& store, VarId var,
                                                      std::span<const Constraint> constraints);

struct Elimination {
  VarId var;
  Value value;
  Explanation explanation;
};

/// Turns a nogood into the eliminating explanation of the value assigned by
/// `decision`: the nogood with that decision taken out.
[[nodiscard]] Elimination eliminating_from_nogood(const Contradiction& nogood,
                                                  ConstraintId decision,
                                                  std::span<const Constraint> constraints);

/// Union of the explanations refuting each alternative of one decision point.
[[nodiscard]] Explanation combine_choice_explanations(std::span<const Explanation> per_choice);

[[nodiscard]] bool is_proof_of_overconstraint(const Explanation& explanation,
                                              std::span<const Constraint> constraints);

}  // namespace ufx

#endif  // UFX_EXPLAIN_HPP
