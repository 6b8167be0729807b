#ifndef UFX_TESTS_FIXTURES_HPP
#define UFX_TESTS_FIXTURES_HPP

#include <set>
#include <string>
#include <vector>

#include "ufx/problem.hpp"
#include "ufx/problem_io.hpp"
#include "ufx/solver.hpp"

namespace ufx::test {

inline const Problem& conference() {
  static const Problem p = load_problem_file(std::string(UFX_DATA_DIR) + "/conference.json");
  return p;
}

// An infeasible core of the conference problem, used as a fixed input for
// projection checks.
inline const std::vector<std::string>& reported_explanation() {
  static const std::vector<std::string> ids{"c5", "c6", "c7", "c8", "c9", "c10", "c11", "c12", "c14"};
  return ids;
}

inline std::vector<Constraint> select(const Problem& p, const std::set<std::string>& ids) {
  std::vector<Constraint> out;
  for (auto& c : p.constraints())
    if (ids.contains(c.name)) out.push_back(c);
  return out;
}

inline std::vector<Constraint> all_except(const Problem& p, const std::set<std::string>& ids) {
  std::vector<Constraint> out;
  for (auto& c : p.constraints())
    if (!ids.contains(c.name)) out.push_back(c);
  return out;
}

inline VarId var(const Solver& s, const std::string& name) { return *s.store().find(name); }
inline ConstraintId cid(const Solver& s, const std::string& name) { return *s.find(name); }

inline Explanation expl(const Solver& s, std::initializer_list<const char*> names) {
  Explanation e;
  for (const auto* n : names) e.insert(cid(s, n));
  return e;
}

// Assignment from name -> value pairs, in the problem's variable order.
inline Assignment assign(const Problem& p, std::initializer_list<std::pair<const char*, Value>> kv) {
  Assignment a{std::vector<Value>(p.variables.size())};
  for (auto [name, value] : kv)
    for (std::size_t i = 0; i < p.variables.size(); ++i)
      if (p.variables[i].name == name) a.values[i] = value;
  return a;
}

}  // namespace ufx::test

#endif  // UFX_TESTS_FIXTURES_HPP
