#include "ufx/problem.hpp"

namespace ufx {

const Cut* Problem::view(const std::string& name) const {
  for (const auto& v : views)
    if (v.name == name) return &v;
  return nullptr;
}

std::vector<Constraint> Problem::constraints() const {
  std::vector<Constraint> out;
  auto walk = [&](auto& self, const BoxSpec& box) -> void {
    for (auto c : box.constraints) {
      c.owner_box = box.code;
      out.push_back(std::move(c));
    }
    for (const auto& child : box.children) self(self, child);
  };
  walk(walk, hierarchy);
  return out;
}

Solver Problem::make_solver() const {
  Solver solver;
  for (const auto& v : variables) solver.add_variable(v);
  for (auto& c : constraints()) solver.post(std::move(c));
  return solver;
}

}  // namespace ufx
