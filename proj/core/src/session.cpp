#include "ufx/session.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "ufx/errors.hpp"

namespace ufx {

const char* to_string(RelaxPolicy policy) {
  return policy == RelaxPolicy::All ? "all" : "in-explanation";
}

std::optional<RelaxPolicy> parse_policy(const std::string& text) {
  if (text == "all") return RelaxPolicy::All;
  if (text == "in-explanation") return RelaxPolicy::InExplanation;
  return std::nullopt;
}

Session::Session(Solver solver, BoxTree tree, Cut view, RelaxPolicy policy)
    : solver_(std::move(solver)), tree_(std::move(tree)), view_(std::move(view)), policy_(policy) {}

Session Session::start(const Problem& problem, const std::string& view, RelaxPolicy policy) {
  const auto* cut = problem.view(view);
  if (!cut) throw InputError("unknown view '" + view + "'");
  auto tree = BoxTree::build(problem.hierarchy);
  if (auto check = validate_cut(tree, *cut); !check.ok())
    throw InputError("view '" + view + "' does not cover constraint '" + check.uncovered.front() +
                     "'");
  return Session(problem.make_solver(), std::move(tree), *cut, policy);
}

bool Session::is_relaxed(const std::string& code) const {
  return std::any_of(relaxed_.begin(), relaxed_.end(),
                     [&](const RelaxedBox& r) { return r.code == code; });
}

const SessionStatus& Session::run() {
  auto outcome = solver_.solve();
  if (auto* s = std::get_if<Solution>(&outcome)) {
    status_ = Solved{std::move(s->assignment)};
  } else {
    auto& oc = std::get<OverConstrained>(outcome);
    status_ = InConflict{project(oc.contradiction.explanation, solver_, tree_, view_),
                         oc.contradiction.explanation};
  }
  return status_;
}

std::vector<std::string> Session::active_in(const std::string& box) const {
  auto ids = tree_.constraints_under(box);
  std::erase_if(ids, [&](const std::string& id) {
    auto c = solver_.find(id);
    return !c || !solver_.is_active(*c);
  });
  return ids;
}

void Session::retract_into_ledger(const std::string& box, const std::string& constraint,
                                  std::vector<Removal>& log) {
  solver_.retract(constraint);
  auto it = std::find_if(relaxed_.begin(), relaxed_.end(),
                         [&](const RelaxedBox& r) { return r.code == box; });
  if (it == relaxed_.end()) it = relaxed_.insert(relaxed_.end(), RelaxedBox{box, {}});
  it->constraints.push_back(constraint);
  log.push_back({box, constraint});
}

RelaxReport Session::relax(std::size_t index, std::optional<RelaxPolicy> policy) {
  const auto* conflict = std::get_if<InConflict>(&status_);
  if (!conflict) throw PreconditionError("relax requires a conflict");
  RelaxReport report;
  if (index == 0) return report;
  if (index > conflict->projection.size())
    throw InputError("conflict entry " + std::to_string(index) + " out of range (1-" +
                     std::to_string(conflict->projection.size()) + ")");
  const auto box = conflict->projection[index - 1];
  const auto mode = policy.value_or(policy_);

  if (mode == RelaxPolicy::All) {
    auto ids = active_in(box);
    for (auto it = ids.rbegin(); it != ids.rend(); ++it) retract_into_ledger(box, *it, report.removed);
    run();
    return report;
  }

  // Constraints on earlier-declared variables go first, like the search order.
  auto rank = [&](const std::string& id) {
    auto cid = *solver_.find(id);
    return std::make_tuple(scope(solver_.constraint(cid).kind).front().index, cid.index);
  };
  while (const auto* current = std::get_if<InConflict>(&status_)) {
    const auto names = constraint_names(current->raw, solver_);
    auto candidates = backward_project(tree_, box, names, RelaxPolicy::InExplanation);
    std::erase_if(candidates, [&](const std::string& id) { return !solver_.is_active(*solver_.find(id)); });
    if (candidates.empty()) break;
    auto first = std::min_element(candidates.begin(), candidates.end(),
                                  [&](const auto& a, const auto& b) { return rank(a) < rank(b); });
    retract_into_ledger(box, *first, report.removed);
    run();
  }
  return report;
}

std::vector<Removal> Session::settle(const Contradiction& conflict, const std::string& restoring) {
  std::vector<Removal> out;
  const auto names = constraint_names(conflict.explanation, solver_);
  const std::set<std::string> in_conflict(names.begin(), names.end());
  // Snapshot the codes: retract_into_ledger appends to existing entries only.
  std::vector<std::string> boxes;
  for (const auto& r : relaxed_)
    if (r.code != restoring) boxes.push_back(r.code);
  for (const auto& box : boxes)
    for (const auto& id : active_in(box))
      if (in_conflict.contains(id)) retract_into_ledger(box, id, out);
  return out;
}

RestoreOutcome Session::restore(const std::string& code) {
  auto entry = std::find_if(relaxed_.begin(), relaxed_.end(),
                            [&](const RelaxedBox& r) { return r.code == code; });
  if (entry == relaxed_.end()) throw PreconditionError("box '" + code + "' is not relaxed");

  Session before = *this;
  RestoreOutcome outcome;
  auto refuse = [&](const Contradiction& c) {
    auto conflict = project(c.explanation, solver_, tree_, view_);
    *this = std::move(before);
    outcome = RestoreOutcome{false, {}, std::move(conflict)};
    return outcome;
  };

  std::vector<ConstraintId> ids;
  for (const auto& name : entry->constraints) ids.push_back(*solver_.find(name));
  std::sort(ids.begin(), ids.end());
  relaxed_.erase(entry);
  solver_.clear_decisions();

  for (auto id : ids) {
    auto r = solver_.repost(id);
    while (!r.ok()) {
      auto extra = settle(*r.contradiction, code);
      if (extra.empty()) return refuse(*r.contradiction);
      outcome.extra_removals.insert(outcome.extra_removals.end(), extra.begin(), extra.end());
      r = solver_.propagate();
    }
  }
  for (;;) {
    auto solved = solver_.solve();
    if (auto* s = std::get_if<Solution>(&solved)) {
      status_ = Solved{std::move(s->assignment)};
      break;
    }
    const auto& c = std::get<OverConstrained>(solved).contradiction;
    auto extra = settle(c, code);
    if (extra.empty()) return refuse(c);
    outcome.extra_removals.insert(outcome.extra_removals.end(), extra.begin(), extra.end());
  }
  outcome.restored = true;
  return outcome;
}

PropagationResult Session::attach_box(const std::string& parent, const BoxSpec& spec) {
  auto r = ufx::attach_box(tree_, solver_, parent, spec);
  if (!validate_cut(tree_, view_).ok()) view_.boxes.push_back(spec.code);
  status_ = Idle{};
  return r;
}

PropagationResult Session::detach_box(const std::string& code) {
  auto r = ufx::detach_box(tree_, solver_, code);
  // Drop ledger entries and view boxes that left the tree with the subtree.
  for (auto& entry : relaxed_)
    std::erase_if(entry.constraints, [&](const std::string& id) { return !tree_.box_of(id); });
  std::erase_if(relaxed_, [&](const RelaxedBox& e) {
    return !tree_.contains(e.code) || e.constraints.empty();
  });
  std::erase_if(view_.boxes, [&](const std::string& b) { return !tree_.contains(b); });
  if (view_.boxes.empty()) view_.boxes.push_back(tree_.root());
  status_ = Idle{};
  return r;
}

}  // namespace ufx
