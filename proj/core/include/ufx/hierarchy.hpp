#ifndef UFX_HIERARCHY_HPP
#define UFX_HIERARCHY_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ufx/constraint.hpp"
#include "ufx/solver.hpp"

namespace ufx {

/// Nested description of a box and everything under it, in posting order.
struct BoxSpec {
  std::string code;
  std::string label;
  std::vector<Constraint> constraints;
  std::vector<BoxSpec> children;

  bool operator==(const BoxSpec&) const = default;
};

struct BoxNode {
  std::string code;
  std::string label;
  std::optional<std::string> parent;
  std::vector<std::string> children;
  std::vector<std::string> constraints;  // attached directly to this box
  std::size_t preorder = 0;
};

/// Tree of user-friendly boxes over the low-level constraints. Every
/// constraint hangs off exactly one box.
class BoxTree {
 public:
  /// Throws InputError on duplicate codes or constraint ids.
  static BoxTree build(const BoxSpec& root);

  [[nodiscard]] const std::string& root() const { return root_; }
  [[nodiscard]] bool contains(const std::string& code) const { return nodes_.contains(code); }
  [[nodiscard]] const BoxNode& node(const std::string& code) const;
  [[nodiscard]] std::size_t size() const { return nodes_.size(); }

  [[nodiscard]] std::optional<std::string> box_of(const std::string& constraint) const;
  [[nodiscard]] bool is_ancestor_or_self(const std::string& ancestor, const std::string& code) const;
  /// Codes in preorder.
  [[nodiscard]] std::vector<std::string> preorder() const;
  /// Constraint ids at or below `code`, in preorder.
  [[nodiscard]] std::vector<std::string> constraints_under(const std::string& code) const;
  [[nodiscard]] std::size_t constraint_count() const { return owner_.size(); }

  /// Grafts `spec` below `parent`. Only the tree is touched.
  void attach(const std::string& parent, const BoxSpec& spec);
  /// Removes the subtree rooted at `code` (never the root) and returns the
  /// constraint ids it held.
  std::vector<std::string> detach(const std::string& code);

 private:
  void insert(const BoxSpec& spec, std::optional<std::string> parent);
  void renumber();

  std::string root_;
  std::map<std::string, BoxNode> nodes_;
  std::map<std::string, std::string> owner_;  // constraint id -> box code
};

struct Cut {
  std::string name;
  std::vector<std::string> boxes;

  bool operator==(const Cut&) const = default;
};

enum class RelaxPolicy { All, InExplanation };

struct CutValidation {
  std::vector<std::string> uncovered;  // constraint ids without a cut ancestor

  [[nodiscard]] bool ok() const { return uncovered.empty(); }
};

/// Throws InputError when a cut box is not in the tree.
[[nodiscard]] CutValidation validate_cut(const BoxTree& tree, const Cut& cut);

/// Maps each constraint to its deepest ancestor-or-self box in the cut;
/// result is deduplicated and in preorder.
[[nodiscard]] std::vector<std::string> project(std::span<const std::string> constraint_ids,
                                               const BoxTree& tree, const Cut& cut);
/// Same, from a solver explanation. Decisions are skipped.
[[nodiscard]] std::vector<std::string> project(const Explanation& explanation, const Solver& solver,
                                               const BoxTree& tree, const Cut& cut);

/// The constraints to retract when a user relaxes `box`, in preorder.
[[nodiscard]] std::vector<std::string> backward_project(const BoxTree& tree, const std::string& box,
                                                        std::span<const std::string> explanation,
                                                        RelaxPolicy policy);

/// Names of the non-decision members of an explanation.
[[nodiscard]] std::vector<std::string> constraint_names(const Explanation& explanation,
                                                        const Solver& solver);

/// Adds a box subtree to the tree and posts its constraints.
PropagationResult attach_box(BoxTree& tree, Solver& solver, const std::string& parent,
                             const BoxSpec& spec);
/// Removes a box subtree and discards its constraints from the solver.
PropagationResult detach_box(BoxTree& tree, Solver& solver, const std::string& code);

}  // namespace ufx

#endif  // UFX_HIERARCHY_HPP
