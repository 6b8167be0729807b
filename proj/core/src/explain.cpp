#include "ufx/explain.hpp"

#include "ufx/errors.hpp"

namespace ufx {

namespace {

const Constraint& lookup(std::span<const Constraint> constraints, ConstraintId id) {
  if (id.index >= constraints.size())
    throw InputError("unknown constraint #" + std::to_string(id.index));
  return constraints[id.index];
}

}  // namespace

Contradiction contradiction_explanation(const DomainStore& store, VarId var,
                                        std::span<const Constraint> constraints) {
  if (!store.empty(var))
    throw PreconditionError("domain of '" + store.decl(var).name + "' is not empty");
  Contradiction out{var, {}, {}};
  const auto& d = store.decl(var);
  for (Value a = d.lower; a <= d.upper; ++a)
    if (const auto* r = store.record(var, a)) out.explanation.merge(r->explanation);
  for (auto id : out.explanation)
    if (lookup(constraints, id).is_decision) out.decisions.insert(id);
  return out;
}

Elimination eliminating_from_nogood(const Contradiction& nogood, ConstraintId decision,
                                    std::span<const Constraint> constraints) {
  if (!nogood.explanation.contains(decision))
    throw PreconditionError("decision is not part of the nogood");
  const auto& c = lookup(constraints, decision);
  const auto* eq = std::get_if<EqConst>(&c.kind);
  if (!c.is_decision || !eq)
    throw PreconditionError("constraint '" + c.name + "' is not an assignment decision");
  Explanation rest = nogood.explanation;
  rest.erase(decision);
  return {eq->x, eq->k, std::move(rest)};
}

Explanation combine_choice_explanations(std::span<const Explanation> per_choice) {
  if (per_choice.empty()) throw PreconditionError("no choice explanations to combine");
  Explanation out;
  for (const auto& e : per_choice) out.merge(e);
  return out;
}

bool is_proof_of_overconstraint(const Explanation& explanation,
                                std::span<const Constraint> constraints) {
  for (auto id : explanation)
    if (lookup(constraints, id).is_decision) return false;
  return true;
}

}  // namespace ufx
