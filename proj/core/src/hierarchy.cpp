#include "ufx/hierarchy.hpp"

#include <algorithm>
#include <set>

#include "ufx/errors.hpp"

namespace ufx {

namespace {

void collect(const BoxSpec& spec, std::vector<std::string>& codes, std::vector<std::string>& ids) {
  codes.push_back(spec.code);
  for (const auto& c : spec.constraints) ids.push_back(c.name);
  for (const auto& child : spec.children) collect(child, codes, ids);
}

void post_all(const BoxSpec& spec, Solver& solver, PropagationResult& last) {
  for (const auto& c : spec.constraints) {
    auto copy = c;
    copy.owner_box = spec.code;
    last = solver.post(std::move(copy));
  }
  for (const auto& child : spec.children) post_all(child, solver, last);
}

}  // namespace

BoxTree BoxTree::build(const BoxSpec& root) {
  if (root.code.empty()) throw InputError("root box needs a code");
  BoxTree tree;
  tree.root_ = root.code;
  tree.insert(root, std::nullopt);
  tree.renumber();
  return tree;
}

void BoxTree::insert(const BoxSpec& spec, std::optional<std::string> parent) {
  std::vector<std::string> codes, ids;
  collect(spec, codes, ids);
  std::set<std::string> seen_codes, seen_ids;
  for (const auto& c : codes) {
    if (c.empty()) throw InputError("box without a code");
    if (nodes_.contains(c) || !seen_codes.insert(c).second)
      throw InputError("duplicate box code '" + c + "'");
  }
  for (const auto& id : ids) {
    if (owner_.contains(id) || !seen_ids.insert(id).second)
      throw InputError("constraint '" + id + "' attached to more than one box");
  }

  // Validated; now mutate.
  auto add = [this](auto& self, const BoxSpec& s, std::optional<std::string> up) -> void {
    BoxNode n;
    n.code = s.code;
    n.label = s.label;
    n.parent = up;
    for (const auto& c : s.constraints) {
      n.constraints.push_back(c.name);
      owner_.emplace(c.name, s.code);
    }
    for (const auto& child : s.children) n.children.push_back(child.code);
    nodes_.emplace(s.code, std::move(n));
    for (const auto& child : s.children) self(self, child, s.code);
  };
  add(add, spec, std::move(parent));
}

void BoxTree::renumber() {
  std::size_t next = 0;
  auto walk = [&](auto& self, const std::string& code) -> void {
    auto& n = nodes_.at(code);
    n.preorder = next++;
    for (const auto& child : n.children) self(self, child);
  };
  walk(walk, root_);
}

const BoxNode& BoxTree::node(const std::string& code) const {
  auto it = nodes_.find(code);
  if (it == nodes_.end()) throw InputError("unknown box '" + code + "'");
  return it->second;
}

std::optional<std::string> BoxTree::box_of(const std::string& constraint) const {
  auto it = owner_.find(constraint);
  if (it == owner_.end()) return std::nullopt;
  return it->second;
}

bool BoxTree::is_ancestor_or_self(const std::string& ancestor, const std::string& code) const {
  std::optional<std::string> cur = code;
  while (cur) {
    if (*cur == ancestor) return true;
    cur = node(*cur).parent;
  }
  return false;
}

std::vector<std::string> BoxTree::preorder() const {
  std::vector<std::string> out;
  auto walk = [&](auto& self, const std::string& code) -> void {
    out.push_back(code);
    for (const auto& child : node(code).children) self(self, child);
  };
  walk(walk, root_);
  return out;
}

std::vector<std::string> BoxTree::constraints_under(const std::string& code) const {
  std::vector<std::string> out;
  auto walk = [&](auto& self, const std::string& c) -> void {
    const auto& n = node(c);
    out.insert(out.end(), n.constraints.begin(), n.constraints.end());
    for (const auto& child : n.children) self(self, child);
  };
  walk(walk, code);
  return out;
}

void BoxTree::attach(const std::string& parent, const BoxSpec& spec) {
  if (!contains(parent)) throw InputError("unknown box '" + parent + "'");
  insert(spec, parent);
  nodes_.at(parent).children.push_back(spec.code);
  renumber();
}

std::vector<std::string> BoxTree::detach(const std::string& code) {
  const auto& n = node(code);
  if (!n.parent) throw InputError("cannot detach the root box");
  auto held = constraints_under(code);
  auto& siblings = nodes_.at(*n.parent).children;
  siblings.erase(std::remove(siblings.begin(), siblings.end(), code), siblings.end());
  auto drop = [&](auto& self, const std::string& c) -> void {
    auto node_copy = nodes_.at(c);
    for (const auto& child : node_copy.children) self(self, child);
    for (const auto& id : node_copy.constraints) owner_.erase(id);
    nodes_.erase(c);
  };
  drop(drop, code);
  renumber();
  return held;
}

CutValidation validate_cut(const BoxTree& tree, const Cut& cut) {
  std::set<std::string> in_cut;
  for (const auto& b : cut.boxes) {
    if (!tree.contains(b))
      throw InputError("view '" + cut.name + "' names unknown box '" + b + "'");
    in_cut.insert(b);
  }
  CutValidation out;
  for (const auto& code : tree.preorder()) {
    bool covered = false;
    for (std::optional<std::string> cur = code; cur && !covered; cur = tree.node(*cur).parent)
      covered = in_cut.contains(*cur);
    if (!covered) {
      const auto& held = tree.node(code).constraints;
      out.uncovered.insert(out.uncovered.end(), held.begin(), held.end());
    }
  }
  return out;
}

std::vector<std::string> project(std::span<const std::string> constraint_ids, const BoxTree& tree,
                                 const Cut& cut) {
  std::set<std::string> in_cut(cut.boxes.begin(), cut.boxes.end());
  std::set<std::string> hit;
  for (const auto& id : constraint_ids) {
    auto box = tree.box_of(id);
    if (!box) throw InputError("constraint '" + id + "' is not attached to the hierarchy");
    std::optional<std::string> cur = *box;
    while (cur && !in_cut.contains(*cur)) cur = tree.node(*cur).parent;
    if (!cur) throw PreconditionError("view '" + cut.name + "' does not cover '" + id + "'");
    hit.insert(*cur);
  }
  std::vector<std::string> out(hit.begin(), hit.end());
  std::sort(out.begin(), out.end(), [&](const std::string& a, const std::string& b) {
    return tree.node(a).preorder < tree.node(b).preorder;
  });
  return out;
}

std::vector<std::string> constraint_names(const Explanation& explanation, const Solver& solver) {
  std::vector<std::string> names;
  for (auto id : explanation) {
    const auto& c = solver.constraint(id);
    if (!c.is_decision) names.push_back(c.name);
  }
  return names;
}

std::vector<std::string> project(const Explanation& explanation, const Solver& solver,
                                 const BoxTree& tree, const Cut& cut) {
  const auto names = constraint_names(explanation, solver);
  return project(std::span<const std::string>(names), tree, cut);
}

std::vector<std::string> backward_project(const BoxTree& tree, const std::string& box,
                                          std::span<const std::string> explanation,
                                          RelaxPolicy policy) {
  auto under = tree.constraints_under(box);
  if (policy == RelaxPolicy::All) return under;
  std::set<std::string> in_expl(explanation.begin(), explanation.end());
  std::erase_if(under, [&](const std::string& id) { return !in_expl.contains(id); });
  return under;
}

PropagationResult attach_box(BoxTree& tree, Solver& solver, const std::string& parent,
                             const BoxSpec& spec) {
  std::vector<std::string> codes, ids;
  collect(spec, codes, ids);
  for (const auto& id : ids)
    if (solver.find(id)) throw InputError("duplicate constraint id '" + id + "'");
  auto check = [&](auto& self, const BoxSpec& s) -> void {
    for (const auto& c : s.constraints) validate(c, solver.store());
    for (const auto& child : s.children) self(self, child);
  };
  check(check, spec);

  tree.attach(parent, spec);
  PropagationResult last;
  post_all(spec, solver, last);
  return last.ok() ? solver.propagate() : last;
}

PropagationResult detach_box(BoxTree& tree, Solver& solver, const std::string& code) {
  for (const auto& id : tree.detach(code))
    if (solver.find(id)) solver.discard(id);
  return solver.propagate();
}

}  // namespace ufx
