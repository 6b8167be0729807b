#include "ufx/solver.hpp"

#include <algorithm>

#include "ufx/errors.hpp"

namespace ufx {

VarId Solver::add_variable(const VariableDecl& decl) {
  auto id = store_.add_variable(decl);
  watchers_.emplace_back();
  return id;
}

ConstraintId Solver::register_constraint(Constraint c) {
  validate(c, store_);
  ConstraintId id{static_cast<std::uint32_t>(constraints_.size())};
  for (auto v : scope(c.kind)) watchers_[v.index].push_back(id);
  constraints_.push_back(std::move(c));
  active_.push_back(false);
  bound_.push_back(true);
  queued_.push_back(false);
  return id;
}

PropagationResult Solver::post(Constraint c) {
  if (c.is_decision) throw InputError("decisions are posted by search only");
  if (by_name_.contains(c.name)) throw InputError("duplicate constraint id '" + c.name + "'");
  auto name = c.name;
  auto id = register_constraint(std::move(c));
  by_name_.emplace(std::move(name), id);
  active_[id.index] = true;
  enqueue(id);
  return propagate();
}

PropagationResult Solver::repost(ConstraintId id) {
  const auto& c = constraint(id);
  if (c.is_decision || !bound_[id.index])
    throw PreconditionError("constraint '" + c.name + "' cannot be reposted");
  if (active_[id.index]) throw PreconditionError("constraint '" + c.name + "' is already active");
  active_[id.index] = true;
  enqueue(id);
  return propagate();
}

const Constraint& Solver::constraint(ConstraintId id) const {
  if (id.index >= constraints_.size())
    throw InputError("unknown constraint #" + std::to_string(id.index));
  return constraints_[id.index];
}

std::optional<ConstraintId> Solver::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

bool Solver::is_active(ConstraintId id) const {
  return id.index < active_.size() && active_[id.index];
}

std::vector<ConstraintId> Solver::active_constraints() const {
  std::vector<ConstraintId> out;
  for (std::uint32_t i = 0; i < active_.size(); ++i)
    if (active_[i]) out.push_back({i});
  return out;
}

void Solver::enqueue(ConstraintId id) {
  if (queued_[id.index]) return;
  queued_[id.index] = true;
  queue_.push_back(id);
}

void Solver::enqueue_watchers(VarId var) {
  for (auto id : watchers_[var.index])
    if (active_[id.index]) enqueue(id);
}

std::optional<Contradiction> Solver::current_contradiction() const {
  for (std::uint32_t v = 0; v < store_.variable_count(); ++v)
    if (store_.empty({v})) return contradiction_explanation(store_, {v}, constraints_);
  return std::nullopt;
}

std::optional<Contradiction> Solver::commit(std::vector<PendingRemoval>& removals) {
  for (auto& r : removals) {
    auto outcome = store_.remove_value(r.var, r.value, std::move(r.explanation));
    if (outcome.kind == RemovalKind::AlreadyAbsent) continue;
    enqueue_watchers(r.var);
    if (outcome.kind == RemovalKind::Wipeout)
      return contradiction_explanation(store_, r.var, constraints_);
  }
  return std::nullopt;
}

PropagationResult Solver::propagate() {
  if (auto c = current_contradiction()) return {std::move(c)};
  while (!queue_.empty()) {
    auto id = queue_.front();
    queue_.pop_front();
    queued_[id.index] = false;
    if (!active_[id.index]) continue;
    auto removals = propagate_constraint(id, constraints_[id.index], store_);
    if (auto c = commit(removals)) {
      // The propagator did not finish; keep it pending for after the repair.
      if (!queued_[id.index]) {
        queued_[id.index] = true;
        queue_.push_front(id);
      }
      return {std::move(c)};
    }
  }
  return {};
}

void Solver::depropagate(ConstraintId id, std::vector<DomainStore::Restored>& restored) {
  if (!is_active(id)) throw PreconditionError("constraint is not active");
  active_[id.index] = false;
  if (constraints_[id.index].is_decision)
    decisions_.erase(std::remove(decisions_.begin(), decisions_.end(), id), decisions_.end());
  auto back = store_.restore_citing(id);
  std::vector<bool> touched(store_.variable_count(), false);
  for (const auto& r : back) {
    if (!touched[r.variable.index]) {
      touched[r.variable.index] = true;
      enqueue_watchers(r.variable);
    }
  }
  restored.insert(restored.end(), back.begin(), back.end());
}

RepropagationReport Solver::retract(ConstraintId id) {
  if (!is_active(id)) {
    const auto name = id.index < constraints_.size() ? constraints_[id.index].name
                                                     : "#" + std::to_string(id.index);
    throw InputError("constraint '" + name + "' is not active");
  }
  RepropagationReport report;
  depropagate(id, report.restored);
  report.result = propagate();
  return report;
}

RepropagationReport Solver::retract(const std::string& name) {
  auto id = find(name);
  if (!id) throw InputError("unknown constraint id '" + name + "'");
  return retract(*id);
}

RepropagationReport Solver::discard(const std::string& name) {
  auto id = find(name);
  if (!id) throw InputError("unknown constraint id '" + name + "'");
  RepropagationReport report;
  if (is_active(*id)) report = retract(*id);
  by_name_.erase(name);
  bound_[id->index] = false;
  return report;
}

PropagationResult Solver::clear_decisions() {
  std::vector<DomainStore::Restored> restored;
  while (!decisions_.empty()) depropagate(decisions_.back(), restored);
  return propagate();
}

ConstraintId Solver::post_decision(VarId var, Value value) {
  if (!store_.contains(var, value))
    throw PreconditionError("decision on a value outside the current domain");
  Constraint dc{"$dc" + std::to_string(++decision_counter_), EqConst{var, value}, true, {}};
  auto id = register_constraint(std::move(dc));
  active_[id.index] = true;
  decisions_.push_back(id);
  enqueue(id);
  return id;
}

PropagationResult Solver::decide(VarId var, Value value) {
  post_decision(var, value);
  return propagate();
}

RemovalOutcome Solver::record_elimination(Elimination elimination) {
  auto outcome = store_.remove_value(elimination.var, elimination.value,
                                     std::move(elimination.explanation));
  if (outcome.kind != RemovalKind::AlreadyAbsent) enqueue_watchers(elimination.var);
  return outcome;
}

SolveOutcome Solver::solve() {
  clear_decisions();
  for (;;) {
    auto result = propagate();
    if (result.ok()) {
      std::optional<VarId> branch;
      for (std::uint32_t v = 0; v < store_.variable_count(); ++v) {
        const auto n = store_.size({v});
        if (n > 1 && (!branch || n < store_.size(*branch))) branch = VarId{v};
      }
      if (!branch) {
        Assignment a;
        a.values.reserve(store_.variable_count());
        for (std::uint32_t v = 0; v < store_.variable_count(); ++v)
          a.values.push_back(store_.min({v}));
        return Solution{std::move(a)};
      }
      post_decision(*branch, store_.min(*branch));
      continue;
    }

    auto& nogood = *result.contradiction;
    if (nogood.decisions.empty()) return OverConstrained{std::move(nogood)};

    auto culprit = std::find_if(decisions_.rbegin(), decisions_.rend(),
                                [&](ConstraintId d) { return nogood.decisions.contains(d); });
    if (culprit == decisions_.rend())
      throw PreconditionError("nogood cites a decision that is no longer live");
    const auto dc = *culprit;
    auto elim = eliminating_from_nogood(nogood, dc, constraints_);
    std::vector<DomainStore::Restored> restored;
    depropagate(dc, restored);
    record_elimination(std::move(elim));
  }
}

}  // namespace ufx
