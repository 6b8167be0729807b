#include "ufx/oracle.hpp"

#include "ufx/errors.hpp"
#include "ufx/solver.hpp"

namespace ufx::oracle {

namespace {

void guard(std::span<const VariableDecl> vars, const std::vector<std::uint32_t>& free) {
  std::uint64_t total = 1;
  for (auto v : free) {
    total *= static_cast<std::uint64_t>(vars[v].upper - vars[v].lower) + 1;
    if (total > kMaxAssignments) throw PreconditionError("enumeration space too large");
  }
}

// Odometer over `free` variables; `visit` returns false to stop.
template <class Visit>
void odometer(std::span<const VariableDecl> vars, const std::vector<std::uint32_t>& free,
              Assignment& a, Visit visit) {
  for (auto v : free) a.values[v] = vars[v].lower;
  for (;;) {
    if (!visit(a)) return;
    std::size_t i = 0;
    for (; i < free.size(); ++i) {
      auto v = free[i];
      if (a.values[v] < vars[v].upper) {
        ++a.values[v];
        break;
      }
      a.values[v] = vars[v].lower;
    }
    if (i == free.size()) return;
  }
}

bool satisfies(std::span<const Constraint> constraints, const Assignment& a) {
  for (const auto& c : constraints)
    if (!evaluate(c, a)) return false;
  return true;
}

}  // namespace

OracleResult enumerate(std::span<const VariableDecl> variables,
                       std::span<const Constraint> constraints, std::size_t max_witnesses) {
  std::vector<std::uint32_t> all(variables.size());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  guard(variables, all);
  OracleResult out;
  Assignment a{std::vector<Value>(variables.size())};
  odometer(variables, all, a, [&](const Assignment& cur) {
    if (satisfies(constraints, cur)) {
      ++out.solution_count;
      if (out.witnesses.size() < max_witnesses) out.witnesses.push_back(cur);
    }
    return true;
  });
  return out;
}

std::optional<Assignment> find_witness(std::span<const VariableDecl> variables,
                                       std::span<const Constraint> constraints,
                                       std::span<const Fix> fixed) {
  Assignment a{std::vector<Value>(variables.size())};
  std::vector<bool> pinned(variables.size(), false), relevant(variables.size(), false);
  for (std::uint32_t v = 0; v < variables.size(); ++v) a.values[v] = variables[v].lower;
  for (const auto& f : fixed) {
    if (f.value < variables[f.var.index].lower || f.value > variables[f.var.index].upper)
      return std::nullopt;
    pinned[f.var.index] = true;
    a.values[f.var.index] = f.value;
  }
  for (const auto& c : constraints)
    for (auto v : scope(c.kind)) relevant[v.index] = true;
  std::vector<std::uint32_t> free;
  for (std::uint32_t v = 0; v < variables.size(); ++v)
    if (relevant[v] && !pinned[v]) free.push_back(v);
  guard(variables, free);
  std::optional<Assignment> found;
  odometer(variables, free, a, [&](const Assignment& cur) {
    if (!satisfies(constraints, cur)) return true;
    found = cur;
    return false;
  });
  return found;
}

bool infeasible(std::span<const VariableDecl> variables, std::span<const Constraint> constraints) {
  return !find_witness(variables, constraints).has_value();
}

Domains domains_of(const DomainStore& store) {
  Domains out;
  for (std::uint32_t v = 0; v < store.variable_count(); ++v) out.push_back(store.values({v}));
  return out;
}

Domains scratch_domains(std::span<const VariableDecl> variables,
                        std::span<const Constraint> constraints,
                        const std::set<std::string>& excluded) {
  Solver fresh;
  for (const auto& v : variables) fresh.add_variable(v);
  for (const auto& c : constraints) {
    if (excluded.contains(c.name)) continue;
    auto copy = c;
    copy.is_decision = false;
    fresh.post(std::move(copy));
  }
  fresh.propagate();
  return domains_of(fresh.store());
}

Domains scratch_domains(const Problem& problem, const std::set<std::string>& excluded) {
  const auto cs = problem.constraints();
  return scratch_domains(problem.variables, cs, excluded);
}

}  // namespace ufx::oracle
