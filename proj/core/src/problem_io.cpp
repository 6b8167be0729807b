#include "ufx/problem_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "ufx/errors.hpp"

namespace ufx {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError((path.empty() ? std::string("/") : path) + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing '") + key + "'");
  return *it;
}

std::string get_string(const json& obj, const char* key, const std::string& path) {
  const auto& v = member(obj, key, path);
  if (!v.is_string()) fail(path + "/" + key, "expected a string");
  return v.get<std::string>();
}

Value get_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<Value>();
}

const json& get_array(const json& obj, const char* key, const std::string& path,
                      bool optional = false) {
  static const json empty = json::array();
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (optional) return empty;
    fail(path, std::string("missing '") + key + "'");
  }
  if (!it->is_array()) fail(path + "/" + key, "expected an array");
  return *it;
}

class Loader {
 public:
  explicit Loader(const std::vector<VariableDecl>& vars) {
    for (std::uint32_t i = 0; i < vars.size(); ++i) {
      store_.add_variable(vars[i]);
    }
  }

  BoxSpec box(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a box object");
    BoxSpec out;
    out.code = get_string(j, "code", path);
    if (out.code.empty()) fail(path + "/code", "empty box code");
    if (!codes_.insert(out.code).second) fail(path + "/code", "duplicate box code '" + out.code + "'");
    out.label = j.contains("label") ? get_string(j, "label", path) : out.code;
    const auto& cs = get_array(j, "constraints", path, true);
    for (std::size_t i = 0; i < cs.size(); ++i)
      out.constraints.push_back(constraint(cs[i], path + "/constraints/" + std::to_string(i), out.code));
    const auto& kids = get_array(j, "children", path, true);
    for (std::size_t i = 0; i < kids.size(); ++i)
      out.children.push_back(box(kids[i], path + "/children/" + std::to_string(i)));
    return out;
  }

 private:
  VarId var(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a variable name");
    auto v = store_.find(j.get<std::string>());
    if (!v) fail(path, "unknown variable '" + j.get<std::string>() + "'");
    return *v;
  }

  Constraint constraint(const json& j, const std::string& path, const std::string& owner) {
    if (!j.is_object()) fail(path, "expected a constraint object");
    Constraint c;
    c.name = get_string(j, "id", path);
    if (c.name.empty()) fail(path + "/id", "empty constraint id");
    if (!ids_.insert(c.name).second) fail(path + "/id", "duplicate constraint id '" + c.name + "'");
    c.owner_box = owner;
    const auto kind = get_string(j, "kind", path);
    const auto& args = get_array(j, "args", path);
    const auto apath = path + "/args";
    auto arity = [&](std::size_t n) {
      if (args.size() != n)
        fail(apath, "'" + kind + "' takes " + std::to_string(n) + " arguments");
    };
    if (kind == "neq_vars") {
      arity(2);
      c.kind = NeqVars{var(args[0], apath + "/0"), var(args[1], apath + "/1")};
    } else if (kind == "geq_plus") {
      arity(3);
      c.kind = GeqPlus{var(args[0], apath + "/0"), var(args[1], apath + "/1"),
                       get_int(args[2], apath + "/2")};
    } else if (kind == "gt") {
      arity(2);
      c.kind = GeqPlus{var(args[0], apath + "/0"), var(args[1], apath + "/1"), 1};
    } else if (kind == "neq_const") {
      arity(2);
      c.kind = NeqConst{var(args[0], apath + "/0"), get_int(args[1], apath + "/1")};
    } else if (kind == "eq_const") {
      arity(2);
      c.kind = EqConst{var(args[0], apath + "/0"), get_int(args[1], apath + "/1")};
    } else {
      fail(path + "/kind", "unknown constraint kind '" + kind + "'");
    }
    try {
      validate(c, store_);
    } catch (const InputError& e) {
      fail(path, e.what());
    }
    return c;
  }

  DomainStore store_;
  std::set<std::string> codes_;
  std::set<std::string> ids_;
};

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

json constraint_to_json(const Constraint& c, const Problem& p) {
  auto name = [&](VarId v) { return p.variables.at(v.index).name; };
  return std::visit(
      overloaded{
          [&](const NeqVars& k) {
            return json{{"id", c.name}, {"kind", "neq_vars"}, {"args", {name(k.x), name(k.y)}}};
          },
          [&](const GeqPlus& k) {
            return json{{"id", c.name}, {"kind", "geq_plus"}, {"args", {name(k.x), name(k.y), k.k}}};
          },
          [&](const NeqConst& k) {
            return json{{"id", c.name}, {"kind", "neq_const"}, {"args", {name(k.x), k.k}}};
          },
          [&](const EqConst& k) {
            return json{{"id", c.name}, {"kind", "eq_const"}, {"args", {name(k.x), k.k}}};
          },
      },
      c.kind);
}

json box_to_json(const BoxSpec& box, const Problem& p, const DomainStore* store) {
  json cs = json::array();
  for (const auto& c : box.constraints) {
    auto j = constraint_to_json(c, p);
    if (store) j["text"] = describe(c.kind, *store);
    cs.push_back(std::move(j));
  }
  json kids = json::array();
  for (const auto& child : box.children) kids.push_back(box_to_json(child, p, store));
  return json{{"code", box.code}, {"label", box.label}, {"constraints", cs}, {"children", kids}};
}

}  // namespace

Problem load_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!doc.is_object()) fail("", "expected a problem object");

  Problem p;
  p.name = get_string(doc, "name", "");
  const auto& vars = get_array(doc, "variables", "");
  std::set<std::string> var_names;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto path = "/variables/" + std::to_string(i);
    if (!vars[i].is_object()) fail(path, "expected a variable object");
    VariableDecl d;
    d.name = get_string(vars[i], "name", path);
    d.lower = get_int(member(vars[i], "lower", path), path + "/lower");
    d.upper = get_int(member(vars[i], "upper", path), path + "/upper");
    if (d.lower > d.upper) fail(path, "lower bound exceeds upper bound");
    if (!var_names.insert(d.name).second) fail(path + "/name", "duplicate variable '" + d.name + "'");
    p.variables.push_back(std::move(d));
  }

  Loader loader(p.variables);
  p.hierarchy = loader.box(member(doc, "hierarchy", ""), "/hierarchy");
  const auto tree = BoxTree::build(p.hierarchy);

  const auto& views = get_array(doc, "views", "", true);
  std::set<std::string> view_names;
  for (std::size_t i = 0; i < views.size(); ++i) {
    const auto path = "/views/" + std::to_string(i);
    if (!views[i].is_object()) fail(path, "expected a view object");
    Cut cut;
    cut.name = get_string(views[i], "name", path);
    if (!view_names.insert(cut.name).second) fail(path + "/name", "duplicate view '" + cut.name + "'");
    const auto& boxes = get_array(views[i], "cut", path);
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      if (!boxes[b].is_string()) fail(path + "/cut/" + std::to_string(b), "expected a box code");
      auto code = boxes[b].get<std::string>();
      if (!tree.contains(code))
        fail(path + "/cut/" + std::to_string(b), "unknown box '" + code + "'");
      cut.boxes.push_back(std::move(code));
    }
    if (auto check = validate_cut(tree, cut); !check.ok())
      fail(path + "/cut", "does not cover constraint '" + check.uncovered.front() + "'");
    p.views.push_back(std::move(cut));
  }
  return p;
}

Problem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return load_problem(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

json to_json(const Problem& problem) {
  json vars = json::array();
  for (const auto& v : problem.variables)
    vars.push_back({{"name", v.name}, {"lower", v.lower}, {"upper", v.upper}});
  json views = json::array();
  for (const auto& v : problem.views) views.push_back({{"name", v.name}, {"cut", v.boxes}});
  return json{{"name", problem.name},
              {"variables", vars},
              {"hierarchy", box_to_json(problem.hierarchy, problem, nullptr)},
              {"views", views}};
}

std::string serialize_problem(const Problem& problem) { return to_json(problem).dump(2) + "\n"; }

json tree_to_json(const BoxSpec& box, const Problem& problem) {
  DomainStore store;
  for (const auto& v : problem.variables) store.add_variable(v);
  return box_to_json(box, problem, &store);
}

}  // namespace ufx
