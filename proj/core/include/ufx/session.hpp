#ifndef UFX_SESSION_HPP
#define UFX_SESSION_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ufx/hierarchy.hpp"
#include "ufx/problem.hpp"
#include "ufx/solver.hpp"

namespace ufx {

struct Idle {};
struct InConflict {
  std::vector<std::string> projection;  // box codes, preorder; shown 1-based
  Explanation raw;
};
struct Solved {
  Assignment assignment;
};
using SessionStatus = std::variant<Idle, InConflict, Solved>;

struct RelaxedBox {
  std::string code;
  std::vector<std::string> constraints;  // in retraction order
};

struct Removal {
  std::string box;
  std::string constraint;
};

struct RelaxReport {
  std::vector<Removal> removed;
};

struct RestoreOutcome {
  bool restored = false;
  std::vector<Removal> extra_removals;   // when restored
  std::vector<std::string> conflict;     // projection, when refused
};

/// One user's negotiation with an over-constrained problem: look at the
/// conflict through a view, relax boxes until a solution exists, then try
/// to put relaxed boxes back.
class Session {
 public:
  /// Posts every problem constraint. Throws InputError for an unknown view
  /// or one that does not cover the hierarchy.
  static Session start(const Problem& problem, const std::string& view, RelaxPolicy policy);

  const SessionStatus& run();

  /// `index` is 1-based into the current conflict; 0 declines. Requires a
  /// conflict. All retracts every constraint of the box at once;
  /// InExplanation retracts the box's explanation members one at a time,
  /// re-solving in between, and stops as soon as the box is no longer
  /// implicated.
  RelaxReport relax(std::size_t index, std::optional<RelaxPolicy> policy = std::nullopt);

  /// Re-posts a relaxed box. Conflicts are settled by retracting further
  /// constraints of other relaxed boxes only; if that is not enough the
  /// session is left exactly as it was and the conflict is returned.
  RestoreOutcome restore(const std::string& code);

  PropagationResult attach_box(const std::string& parent, const BoxSpec& spec);
  PropagationResult detach_box(const std::string& code);

  [[nodiscard]] const SessionStatus& status() const { return status_; }
  [[nodiscard]] const Solver& solver() const { return solver_; }
  [[nodiscard]] const BoxTree& tree() const { return tree_; }
  [[nodiscard]] const Cut& view() const { return view_; }
  [[nodiscard]] RelaxPolicy policy() const { return policy_; }
  [[nodiscard]] const std::vector<RelaxedBox>& relaxed() const { return relaxed_; }
  [[nodiscard]] bool is_relaxed(const std::string& code) const;

 private:
  Session(Solver solver, BoxTree tree, Cut view, RelaxPolicy policy);

  void retract_into_ledger(const std::string& box, const std::string& constraint,
                           std::vector<Removal>& log);
  std::vector<std::string> active_in(const std::string& box) const;
  std::vector<Removal> settle(const Contradiction& conflict, const std::string& restoring);

  Solver solver_;
  BoxTree tree_;
  Cut view_;
  RelaxPolicy policy_;
  std::vector<RelaxedBox> relaxed_;
  SessionStatus status_ = Idle{};
};

[[nodiscard]] const char* to_string(RelaxPolicy policy);
[[nodiscard]] std::optional<RelaxPolicy> parse_policy(const std::string& text);

}  // namespace ufx

#endif  // UFX_SESSION_HPP
