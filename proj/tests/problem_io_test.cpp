#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/random_problem.hpp"
#include "ufx/errors.hpp"
#include "ufx/problem_io.hpp"

using namespace ufx;
using ufx::test::conference;

namespace {

std::string error_of(const std::string& text) {
  try {
    (void)load_problem(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

const char* kTiny = R"({
  "name": "tiny",
  "variables": [{"name": "a", "lower": 0, "upper": 2}, {"name": "b", "lower": 0, "upper": 2}],
  "hierarchy": {"code": "R", "children": [
    {"code": "K", "label": "kids", "constraints": [
      {"id": "k1", "kind": "gt", "args": ["a", "b"]},
      {"id": "k2", "kind": "neq_const", "args": ["b", 0]}]}]},
  "views": [{"name": "v", "cut": ["K"]}]
})";

}  // namespace

TEST_CASE("conference file contents") {
  const auto& p = conference();
  CHECK(p.variables.size() == 4);
  CHECK(p.variables[0].name == "Am");
  CHECK(p.constraints().size() == 14);
  CHECK(BoxTree::build(p.hierarchy).size() == 8);
  CHECK(p.views.size() == 4);
  CHECK(p.view("michael-code")->boxes == std::vector<std::string>{"IC", "PAB", "N4D", "NPA"});
  const auto c6 = p.constraints()[5];
  CHECK(c6.name == "c6");
  CHECK(c6.owner_box == "PAB");
  CHECK(std::get<GeqPlus>(c6.kind).k == 1);
}

TEST_CASE("minimal file") {
  auto p = load_problem_file(std::string(UFX_DATA_DIR) + "/minimal.json");
  CHECK(p.variables.size() == 1);
  CHECK(p.hierarchy.label == "Everything");
  CHECK(p.constraints().empty());
}

TEST_CASE("defaults and normalisation") {
  auto p = load_problem(kTiny);
  CHECK(p.hierarchy.label == "R");
  CHECK(std::get<GeqPlus>(p.constraints()[0].kind) == GeqPlus{VarId{0}, VarId{1}, 1});
}

TEST_CASE("diagnostics") {
  CHECK(error_of("{\n  \"name\": 1,\n  oops\n}").find("line 3") != std::string::npos);
  std::string dup = kTiny;
  dup.replace(dup.find("\"k2\""), 4, "\"k1\"");
  const auto msg = error_of(dup);
  CHECK(msg.find("duplicate constraint id 'k1'") != std::string::npos);
  CHECK(msg.find("/hierarchy/children/0/constraints/1/id") != std::string::npos);

  std::string unknown_var = kTiny;
  unknown_var.replace(unknown_var.find("[\"b\", 0]"), 8, "[\"z\", 0]");
  CHECK(error_of(unknown_var).find("/args/0") != std::string::npos);

  std::string bad_kind = kTiny;
  bad_kind.replace(bad_kind.find("\"gt\""), 4, "\"lt\"");
  CHECK(error_of(bad_kind).find("kind") != std::string::npos);

  std::string bad_view = kTiny;
  bad_view.replace(bad_view.find("[\"K\"]"), 5, "[\"Q\"]");
  CHECK_FALSE(error_of(bad_view).empty());

  std::string reversed = kTiny;
  reversed.replace(reversed.find("\"upper\": 2}, {"), 10, "\"upper\": -1");
  CHECK_FALSE(error_of(reversed).empty());

  CHECK(error_of("[]").size() > 0);
  CHECK_THROWS_AS((void)load_problem_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("serialization round-trips") {
  CHECK(load_problem(serialize_problem(conference())) == conference());
  std::mt19937 rng(23);
  for (int round = 0; round < 200; ++round) {
    auto inst = ufx::test::random_instance(rng);
    Problem p;
    p.name = "random";
    p.variables = inst.variables;
    p.hierarchy.code = "ROOT";
    p.hierarchy.label = "root";
    const auto half = inst.constraints.size() / 2;
    p.hierarchy.constraints.assign(inst.constraints.begin(), inst.constraints.begin() + half);
    BoxSpec child{"CH", "child", {inst.constraints.begin() + half, inst.constraints.end()}, {}};
    for (auto& c : p.hierarchy.constraints) c.owner_box = "ROOT";
    for (auto& c : child.constraints) c.owner_box = "CH";
    p.hierarchy.children.push_back(child);
    p.views = {Cut{"root", {"ROOT"}}, Cut{"split", {"ROOT", "CH"}}};
    const auto text = serialize_problem(p);
    const auto back = load_problem(text);
    CHECK(back == p);
    CHECK(serialize_problem(back) == text);
  }
}

TEST_CASE("tree json carries rendered constraints") {
  auto j = tree_to_json(conference().hierarchy, conference());
  CHECK(j["code"] == "PB");
  const auto& pab = j["children"][1]["children"][0];
  CHECK(pab["code"] == "PAB");
  CHECK(pab["constraints"][0]["text"] == "Ma >= Am + 1");
}
