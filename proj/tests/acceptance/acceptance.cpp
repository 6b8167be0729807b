// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "support/random_problem.hpp"
#include "ufx/hierarchy.hpp"
#include "ufx/oracle.hpp"
#include "ufx/session.hpp"

using namespace ufx;
using ufx::test::assign;
using ufx::test::conference;
using ufx::test::reported_explanation;

namespace {

using Names = std::vector<std::string>;

int failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
  std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
  if (!ok) ++failures;
}

std::string join(const Names& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out + "]";
}

std::vector<Constraint> as_problem_constraints(const Solver& s, const Explanation& e) {
  std::vector<Constraint> out;
  for (auto id : e) {
    auto c = s.constraint(id);
    c.is_decision = false;
    out.push_back(std::move(c));
  }
  return out;
}

bool verifies(const Solver& s, const Assignment& a) {
  for (auto id : s.active_constraints())
    if (!s.constraint(id).is_decision && !evaluate(s.constraint(id), a)) return false;
  return true;
}

void over_constrainedness() {
  auto s = conference().make_solver();
  auto out = s.solve();
  bool ok = std::holds_alternative<OverConstrained>(out);
  std::string detail = "solve returned a solution";
  if (ok) {
    const auto& c = std::get<OverConstrained>(out).contradiction;
    const bool decision_free = c.decisions.empty() && is_proof_of_overconstraint(c.explanation, s.constraints());
    const bool infeasible = oracle::infeasible(conference().variables, as_problem_constraints(s, c.explanation));
    const std::set<std::string> reported(reported_explanation().begin(), reported_explanation().end());
    const bool reported_infeasible =
        oracle::infeasible(conference().variables, ufx::test::select(conference(), reported));
    const bool without_c13 = oracle::infeasible(conference().variables, ufx::test::all_except(conference(), {"c13"}));
    ok = decision_free && infeasible && reported_infeasible && without_c13;
    detail = "explanation " + join(constraint_names(c.explanation, s)) + " decision-free=" +
             (decision_free ? "yes" : "no") + " infeasible=" + (infeasible ? "yes" : "no") +
             " reported-infeasible=" + (reported_infeasible ? "yes" : "no") +
             " all-but-c13-infeasible=" + (without_c13 ? "yes" : "no");
  }
  report("over-constrainedness", ok, detail);
}

void projection_fixtures() {
  const auto tree = BoxTree::build(conference().hierarchy);
  const auto& e = reported_explanation();
  struct Case {
    Cut cut;
    Names expected;
  };
  const std::vector<Case> cases{{Cut{"a", {"PB"}}, {"PB"}},
                                {Cut{"b", {"SAIC", "N2P", "MC"}}, {"N2P", "MC"}},
                                {Cut{"c", {"PB", "PAB", "N4D", "NPA"}}, {"PB", "PAB", "N4D", "NPA"}}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const auto got = project(e, tree, c.cut);
    ok = ok && got == c.expected;
    detail += join(c.cut.boxes) + "->" + join(got) + " ";
  }
  report("projection-fixtures", ok, detail);
}

void backward_projection_fixtures() {
  const auto tree = BoxTree::build(conference().hierarchy);
  const auto& e = reported_explanation();
  const auto all = backward_project(tree, "N4D", e, RelaxPolicy::All);
  const auto part = backward_project(tree, "N4D", e, RelaxPolicy::InExplanation);
  report("backward-projection-fixtures",
         all == Names{"c10", "c11", "c12", "c13"} && part == Names{"c10", "c11", "c12"},
         "all=" + join(all) + " in-explanation=" + join(part));
}

void negotiation_scenario() {
  std::ostringstream log;
  bool ok = true;
  auto s = Session::start(conference(), "michael-code", RelaxPolicy::All);
  s.run();
  const auto* first = std::get_if<InConflict>(&s.status());
  ok = ok && first && first->projection == Names{"IC", "PAB", "N4D", "NPA"};

  s.relax(2, RelaxPolicy::All);
  const auto* second = std::get_if<InConflict>(&s.status());
  ok = ok && second;
  if (second) log << "after PAB " << join(second->projection) << "; ";

  std::size_t n4d = 0;
  if (second)
    for (std::size_t i = 0; i < second->projection.size(); ++i)
      if (second->projection[i] == "N4D") n4d = i + 1;
  ok = ok && n4d != 0;
  if (n4d) s.relax(n4d, RelaxPolicy::InExplanation);
  const auto* solved = std::get_if<Solved>(&s.status());
  const auto first_reported = assign(conference(), {{"Am", 4}, {"Pm", 1}, {"Ma", 2}, {"Mp", 3}});
  ok = ok && solved && verifies(s.solver(), solved->assignment) && verifies(s.solver(), first_reported);
  if (solved) log << "solved, reported solution verifies=" << verifies(s.solver(), first_reported) << "; ";

  auto back = s.restore("PAB");
  const bool extra_n4d =
      !back.extra_removals.empty() &&
      std::all_of(back.extra_removals.begin(), back.extra_removals.end(),
                  [](const Removal& r) { return r.box == "N4D"; });
  solved = std::get_if<Solved>(&s.status());
  const auto second_reported = assign(conference(), {{"Am", 1}, {"Pm", 2}, {"Ma", 3}, {"Mp", 4}});
  ok = ok && back.restored && extra_n4d && solved && verifies(s.solver(), solved->assignment) &&
       verifies(s.solver(), second_reported);
  log << "restore PAB restored=" << back.restored << " extra N4D removals=" << back.extra_removals.size()
      << " reported solution verifies=" << verifies(s.solver(), second_reported);
  report("negotiation-scenario", ok, log.str());
}

struct Corpus {
  std::vector<ufx::test::RandomInstance> instances;
};

Corpus make_corpus() {
  std::mt19937 rng(20240611);
  Corpus c;
  for (int i = 0; i < 100; ++i) c.instances.push_back(ufx::test::random_consistent_instance(rng));
  return c;
}

void retraction_equivalence(const Corpus& corpus) {
  std::mt19937 rng(99);
  int mismatches = 0;
  for (const auto& inst : corpus.instances) {
    auto s = inst.make_solver();
    const auto& victim = inst.constraints[rng() % inst.constraints.size()];
    s.retract(victim.name);
    if (oracle::domains_of(s.store()) != oracle::scratch_domains(inst.variables, inst.constraints, {victim.name}))
      ++mismatches;
  }
  report("retraction-equivalence", mismatches == 0,
         std::to_string(corpus.instances.size()) + " instances, " + std::to_string(mismatches) + " mismatches");
}

int unsound_records(const ufx::test::RandomInstance& inst, const Solver& s) {
  int bad = 0;
  for (const auto* r : s.store().records()) {
    const auto cs = as_problem_constraints(s, r->explanation);
    const oracle::Fix fix{r->variable, r->value};
    if (oracle::find_witness(inst.variables, cs, std::span(&fix, 1))) ++bad;
  }
  return bad;
}

void explanation_soundness(const Corpus& corpus) {
  std::mt19937 rng(99);
  int violations = 0;
  std::size_t checked = 0;
  for (const auto& inst : corpus.instances) {
    auto s = inst.make_solver();
    checked += s.store().record_count();
    violations += unsound_records(inst, s);
    s.retract(inst.constraints[rng() % inst.constraints.size()].name);
    checked += s.store().record_count();
    violations += unsound_records(inst, s);
    auto solver = inst.make_solver();
    (void)solver.solve();
    checked += solver.store().record_count();
    violations += unsound_records(inst, solver);
  }
  report("explanation-soundness", violations == 0,
         std::to_string(checked) + " records, " + std::to_string(violations) + " violations");
}

void oracle_agreement(const Corpus& corpus) {
  // The corpus is consistent at the root, so add unfiltered instances to get
  // over-constrained ones too.
  auto instances = corpus.instances;
  std::mt19937 rng(4242);
  for (int i = 0; i < 100; ++i) instances.push_back(ufx::test::random_instance(rng));
  int disagreements = 0;
  int solvable = 0;
  for (const auto& inst : instances) {
    auto s = inst.make_solver();
    auto out = s.solve();
    const bool has_solution = oracle::enumerate(inst.variables, inst.constraints).solution_count > 0;
    solvable += has_solution;
    bool agree = std::holds_alternative<Solution>(out) == has_solution;
    if (const auto* sol = std::get_if<Solution>(&out))
      for (const auto& c : inst.constraints) agree = agree && evaluate(c, sol->assignment);
    if (!agree) ++disagreements;
  }
  report("solver-oracle-agreement", disagreements == 0,
         std::to_string(instances.size()) + " instances (" + std::to_string(solvable) + " solvable), " +
             std::to_string(disagreements) + " disagreements");
}

}  // namespace

int main() {
  over_constrainedness();
  projection_fixtures();
  backward_projection_fixtures();
  negotiation_scenario();
  const auto corpus = make_corpus();
  retraction_equivalence(corpus);
  explanation_soundness(corpus);
  oracle_agreement(corpus);
  return failures == 0 ? 0 : 1;
}
