#include "ufx/domain.hpp"

#include <algorithm>

#include "ufx/errors.hpp"

namespace ufx {

VarId DomainStore::add_variable(const VariableDecl& decl) {
  if (decl.lower > decl.upper)
    throw InputError("variable '" + decl.name + "': lower bound exceeds upper bound");
  if (by_name_.contains(decl.name))
    throw InputError("duplicate variable '" + decl.name + "'");
  VarId id{static_cast<std::uint32_t>(vars_.size())};
  VarState st;
  st.decl = decl;
  st.removed.resize(static_cast<std::size_t>(decl.upper - decl.lower) + 1);
  st.present = st.removed.size();
  vars_.push_back(std::move(st));
  by_name_.emplace(decl.name, id);
  return id;
}

const DomainStore::VarState& DomainStore::state(VarId var) const {
  if (var.index >= vars_.size())
    throw InputError("unknown variable #" + std::to_string(var.index));
  return vars_[var.index];
}

DomainStore::VarState& DomainStore::state(VarId var) {
  return const_cast<VarState&>(std::as_const(*this).state(var));
}

RemovalOutcome DomainStore::remove_value(VarId var, Value value, Explanation explanation) {
  auto& st = state(var);
  if (value < st.decl.lower || value > st.decl.upper)
    throw InputError("value " + std::to_string(value) + " outside original domain of '" +
                     st.decl.name + "'");
  if (explanation.empty())
    throw PreconditionError("removal of " + st.decl.name + "=" + std::to_string(value) +
                            " without explanation");
  auto& slot = st.removed[static_cast<std::size_t>(value - st.decl.lower)];
  if (slot) return {RemovalKind::AlreadyAbsent, var};
  slot = RemovalRecord{var, value, std::move(explanation), next_stamp_++};
  --st.present;
  ++live_records_;
  return {st.present == 0 ? RemovalKind::Wipeout : RemovalKind::Removed, var};
}

std::optional<Explanation> DomainStore::explanation_for(VarId var, Value value) const {
  const auto* r = record(var, value);
  if (!r) return std::nullopt;
  return r->explanation;
}

const RemovalRecord* DomainStore::record(VarId var, Value value) const {
  const auto& st = state(var);
  if (value < st.decl.lower || value > st.decl.upper) return nullptr;
  const auto& slot = st.removed[static_cast<std::size_t>(value - st.decl.lower)];
  return slot ? &*slot : nullptr;
}

std::vector<DomainStore::Restored> DomainStore::restore_citing(ConstraintId id) {
  std::vector<std::pair<std::uint64_t, Restored>> hits;
  for (auto& st : vars_) {
    for (auto& slot : st.removed) {
      if (slot && slot->explanation.contains(id)) {
        hits.push_back({slot->stamp, {slot->variable, slot->value}});
        slot.reset();
        ++st.present;
        --live_records_;
      }
    }
  }
  std::sort(hits.begin(), hits.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Restored> out;
  out.reserve(hits.size());
  for (auto& h : hits) out.push_back(h.second);
  return out;
}

const VariableDecl& DomainStore::decl(VarId var) const { return state(var).decl; }

std::optional<VarId> DomainStore::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

bool DomainStore::contains(VarId var, Value value) const {
  const auto& st = state(var);
  if (value < st.decl.lower || value > st.decl.upper) return false;
  return !st.removed[static_cast<std::size_t>(value - st.decl.lower)];
}

bool DomainStore::in_original(VarId var, Value value) const {
  const auto& st = state(var);
  return value >= st.decl.lower && value <= st.decl.upper;
}

std::size_t DomainStore::size(VarId var) const { return state(var).present; }

Value DomainStore::min(VarId var) const {
  const auto& st = state(var);
  for (std::size_t i = 0; i < st.removed.size(); ++i)
    if (!st.removed[i]) return st.decl.lower + static_cast<Value>(i);
  throw PreconditionError("min of empty domain '" + st.decl.name + "'");
}

Value DomainStore::max(VarId var) const {
  const auto& st = state(var);
  for (std::size_t i = st.removed.size(); i-- > 0;)
    if (!st.removed[i]) return st.decl.lower + static_cast<Value>(i);
  throw PreconditionError("max of empty domain '" + st.decl.name + "'");
}

std::vector<Value> DomainStore::values(VarId var) const {
  const auto& st = state(var);
  std::vector<Value> out;
  out.reserve(st.present);
  for (std::size_t i = 0; i < st.removed.size(); ++i)
    if (!st.removed[i]) out.push_back(st.decl.lower + static_cast<Value>(i));
  return out;
}

std::vector<const RemovalRecord*> DomainStore::records() const {
  std::vector<const RemovalRecord*> out;
  out.reserve(live_records_);
  for (const auto& st : vars_)
    for (const auto& slot : st.removed)
      if (slot) out.push_back(&*slot);
  std::sort(out.begin(), out.end(),
            [](const RemovalRecord* a, const RemovalRecord* b) { return a->stamp < b->stamp; });
  return out;
}

}  // namespace ufx
