#ifndef UFX_TESTS_RANDOM_PROBLEM_HPP
#define UFX_TESTS_RANDOM_PROBLEM_HPP

#include <random>
#include <string>
#include <vector>

#include "ufx/constraint.hpp"
#include "ufx/problem.hpp"
#include "ufx/solver.hpp"

namespace ufx::test {

// Desk-scale random CSPs: <= 6 variables, domains of <= 6 values, <= 12
// constraints drawn from all four kinds.
struct RandomInstance {
  std::vector<VariableDecl> variables;
  std::vector<Constraint> constraints;

  Solver make_solver() const {
    Solver s;
    for (const auto& v : variables) s.add_variable(v);
    for (const auto& c : constraints) s.post(c);
    return s;
  }
};

struct RandomLimits {
  int max_vars = 6;
  int max_domain = 6;
  int max_constraints = 12;
};

inline RandomInstance random_instance(std::mt19937& rng, RandomLimits lim = {}) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  RandomInstance inst;
  const int n = uniform(2, lim.max_vars);
  for (int i = 0; i < n; ++i) {
    const int lower = uniform(0, 2);
    inst.variables.push_back({"x" + std::to_string(i), lower, lower + uniform(1, lim.max_domain) - 1});
  }
  const int m = uniform(1, lim.max_constraints);
  for (int i = 0; i < m; ++i) {
    const VarId x{static_cast<std::uint32_t>(uniform(0, n - 1))};
    VarId y{static_cast<std::uint32_t>(uniform(0, n - 2))};
    if (y.index >= x.index) ++y.index;
    const auto& dx = inst.variables[x.index];
    Constraint c;
    c.name = "r" + std::to_string(i);
    switch (uniform(0, 9)) {
      case 0: case 1: case 2: case 3: c.kind = NeqVars{x, y}; break;
      case 4: case 5: case 6: c.kind = GeqPlus{x, y, uniform(-1, 2)}; break;
      case 7: case 8: c.kind = NeqConst{x, uniform(dx.lower, dx.upper)}; break;
      default: c.kind = EqConst{x, uniform(dx.lower, dx.upper)}; break;
    }
    inst.constraints.push_back(std::move(c));
  }
  return inst;
}

// Instances whose root fixpoint has no wipeout.
inline RandomInstance random_consistent_instance(std::mt19937& rng, RandomLimits lim = {}) {
  for (;;) {
    auto inst = random_instance(rng, lim);
    auto solver = inst.make_solver();
    if (solver.propagate().ok()) return inst;
  }
}

}  // namespace ufx::test

#endif  // UFX_TESTS_RANDOM_PROBLEM_HPP
