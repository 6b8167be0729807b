#include "ufx/constraint.hpp"

#include "ufx/errors.hpp"

namespace ufx {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Union of the explanations of every original value of `var` selected by `pred`.
template <class Pred>
void cite_removed(Explanation& out, const DomainStore& store, VarId var, Pred pred) {
  const auto& d = store.decl(var);
  for (Value b = d.lower; b <= d.upper; ++b) {
    if (!pred(b)) continue;
    if (const auto* r = store.record(var, b)) out.merge(r->explanation);
  }
}

void prune_neq(std::vector<PendingRemoval>& out, ConstraintId id, const DomainStore& store,
               VarId target, VarId peer) {
  if (store.size(peer) != 1) return;
  const Value b = store.min(peer);
  if (!store.contains(target, b)) return;
  Explanation e{id};
  cite_removed(e, store, peer, [b](Value v) { return v != b; });
  out.push_back({target, b, std::move(e)});
}

}  // namespace

Value Assignment::at(VarId v) const {
  if (v.index >= values.size())
    throw InputError("assignment has no value for variable #" + std::to_string(v.index));
  return values[v.index];
}

std::vector<VarId> scope(const ConstraintKind& kind) {
  return std::visit(overloaded{
                        [](const NeqVars& c) { return std::vector<VarId>{c.x, c.y}; },
                        [](const GeqPlus& c) { return std::vector<VarId>{c.x, c.y}; },
                        [](const NeqConst& c) { return std::vector<VarId>{c.x}; },
                        [](const EqConst& c) { return std::vector<VarId>{c.x}; },
                    },
                    kind);
}

void validate(const Constraint& c, const DomainStore& store) {
  const auto vars = scope(c.kind);
  for (auto v : vars)
    if (v.index >= store.variable_count())
      throw InputError("constraint '" + c.name + "' refers to an unknown variable");
  if (vars.size() == 2 && vars[0] == vars[1])
    throw InputError("constraint '" + c.name + "' relates a variable to itself");
  auto check_const = [&](VarId x, Value k) {
    if (!store.in_original(x, k))
      throw InputError("constraint '" + c.name + "': constant " + std::to_string(k) +
                       " outside the domain of '" + store.decl(x).name + "'");
  };
  if (const auto* n = std::get_if<NeqConst>(&c.kind)) check_const(n->x, n->k);
  if (const auto* e = std::get_if<EqConst>(&c.kind)) check_const(e->x, e->k);
  if (c.is_decision && !std::holds_alternative<EqConst>(c.kind))
    throw InputError("constraint '" + c.name + "': only assignments may be decisions");
}

bool evaluate(const Constraint& c, const Assignment& a) {
  return std::visit(overloaded{
                        [&](const NeqVars& k) { return a.at(k.x) != a.at(k.y); },
                        [&](const GeqPlus& k) { return a.at(k.x) >= a.at(k.y) + k.k; },
                        [&](const NeqConst& k) { return a.at(k.x) != k.k; },
                        [&](const EqConst& k) { return a.at(k.x) == k.k; },
                    },
                    c.kind);
}

std::string describe(const ConstraintKind& kind, const DomainStore& store) {
  auto name = [&](VarId v) { return store.decl(v).name; };
  return std::visit(
      overloaded{
          [&](const NeqVars& k) { return name(k.x) + " != " + name(k.y); },
          [&](const GeqPlus& k) {
            std::string s = name(k.x) + " >= " + name(k.y);
            if (k.k > 0) s += " + " + std::to_string(k.k);
            if (k.k < 0) s += " - " + std::to_string(-k.k);
            return s;
          },
          [&](const NeqConst& k) { return name(k.x) + " != " + std::to_string(k.k); },
          [&](const EqConst& k) { return name(k.x) + " == " + std::to_string(k.k); },
      },
      kind);
}

std::vector<PendingRemoval> propagate_constraint(ConstraintId id, const Constraint& c,
                                                 const DomainStore& store) {
  std::vector<PendingRemoval> out;
  std::visit(overloaded{
                 [&](const NeqVars& k) {
                   prune_neq(out, id, store, k.x, k.y);
                   prune_neq(out, id, store, k.y, k.x);
                 },
                 [&](const GeqPlus& k) {
                   // x >= min(y) + k
                   const Value min_y = store.min(k.y);
                   Explanation low{id};
                   cite_removed(low, store, k.y, [min_y](Value b) { return b < min_y; });
                   for (Value a : store.values(k.x)) {
                     if (a >= min_y + k.k) break;
                     out.push_back({k.x, a, low});
                   }
                   // y <= max(x) - k
                   const Value max_x = store.max(k.x);
                   Explanation high{id};
                   cite_removed(high, store, k.x, [max_x](Value a) { return a > max_x; });
                   const auto ys = store.values(k.y);
                   for (auto it = ys.rbegin(); it != ys.rend(); ++it) {
                     if (*it <= max_x - k.k) break;
                     out.push_back({k.y, *it, high});
                   }
                 },
                 [&](const NeqConst& k) {
                   if (store.contains(k.x, k.k)) out.push_back({k.x, k.k, Explanation{id}});
                 },
                 [&](const EqConst& k) {
                   for (Value a : store.values(k.x))
                     if (a != k.k) out.push_back({k.x, a, Explanation{id}});
                 },
             },
             c.kind);
  return out;
}

}  // namespace ufx
