#ifndef UFX_ORACLE_HPP
#define UFX_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ufx/constraint.hpp"
#include "ufx/problem.hpp"

namespace ufx::oracle {

// Brute-force reference machinery for tests. Enumeration only relies on
// evaluate(); scratch_domains() runs a fresh solver and is meant to be
// compared against an incrementally maintained one.

inline constexpr std::uint64_t kMaxAssignments = 10'000'000;

struct OracleResult {
  std::uint64_t solution_count = 0;
  std::vector<Assignment> witnesses;
};

/// Counts every total assignment over the original domains satisfying all
/// `constraints`; keeps up to `max_witnesses` of them.
[[nodiscard]] OracleResult enumerate(std::span<const VariableDecl> variables,
                                     std::span<const Constraint> constraints,
                                     std::size_t max_witnesses = 1);

struct Fix {
  VarId var;
  Value value;
};

/// Any satisfying assignment with `fixed` variables pinned. Variables outside
/// every constraint scope are set to their lower bound.
[[nodiscard]] std::optional<Assignment> find_witness(std::span<const VariableDecl> variables,
                                                     std::span<const Constraint> constraints,
                                                     std::span<const Fix> fixed = {});

[[nodiscard]] bool infeasible(std::span<const VariableDecl> variables,
                              std::span<const Constraint> constraints);

using Domains = std::vector<std::vector<Value>>;

/// Fixpoint domains of a fresh solver holding every constraint not excluded.
/// Constraints are posted in the given order.
[[nodiscard]] Domains scratch_domains(std::span<const VariableDecl> variables,
                                      std::span<const Constraint> constraints,
                                      const std::set<std::string>& excluded);
[[nodiscard]] Domains scratch_domains(const Problem& problem, const std::set<std::string>& excluded);

[[nodiscard]] Domains domains_of(const DomainStore& store);

}  // namespace ufx::oracle

#endif  // UFX_ORACLE_HPP
