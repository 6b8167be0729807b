#ifndef UFX_DOMAIN_HPP
#define UFX_DOMAIN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ufx/explanation.hpp"
#include "ufx/ids.hpp"

namespace ufx {

struct VariableDecl {
  std::string name;
  Value lower = 0;
  Value upper = 0;

  bool operator==(const VariableDecl&) const = default;
};

struct RemovalRecord {
  VarId variable;
  Value value = 0;
  Explanation explanation;
  std::uint64_t stamp = 0;
};

enum class RemovalKind { Removed, AlreadyAbsent, Wipeout };

struct RemovalOutcome {
  RemovalKind kind;
  VarId variable;
};

/// Finite integer domains plus the removal ledger.
///
/// Every value missing from a domain has exactly one live RemovalRecord, and
/// every live record corresponds to exactly one missing value. Restoring a
/// value deletes its record; nothing else ever puts a value back.
class DomainStore {
 public:
  VarId add_variable(const VariableDecl& decl);

  RemovalOutcome remove_value(VarId var, Value value, Explanation explanation);

  [[nodiscard]] std::optional<Explanation> explanation_for(VarId var, Value value) const;
  [[nodiscard]] const RemovalRecord* record(VarId var, Value value) const;

  struct Restored {
    VarId variable;
    Value value;
  };
  /// Deletes every live record whose explanation cites `id` and puts the
  /// corresponding values back, in stamp order.
  std::vector<Restored> restore_citing(ConstraintId id);

  [[nodiscard]] std::size_t variable_count() const { return vars_.size(); }
  [[nodiscard]] const VariableDecl& decl(VarId var) const;
  [[nodiscard]] std::optional<VarId> find(const std::string& name) const;

  [[nodiscard]] bool contains(VarId var, Value value) const;
  [[nodiscard]] bool in_original(VarId var, Value value) const;
  [[nodiscard]] std::size_t size(VarId var) const;
  [[nodiscard]] bool empty(VarId var) const { return size(var) == 0; }
  // min/max require a non-empty domain.
  [[nodiscard]] Value min(VarId var) const;
  [[nodiscard]] Value max(VarId var) const;
  [[nodiscard]] std::vector<Value> values(VarId var) const;

  /// All live records ordered by stamp.
  [[nodiscard]] std::vector<const RemovalRecord*> records() const;
  [[nodiscard]] std::size_t record_count() const { return live_records_; }

 private:
  struct VarState {
    VariableDecl decl;
    std::vector<std::optional<RemovalRecord>> removed;  // indexed by value - lower
    std::size_t present = 0;
  };

  const VarState& state(VarId var) const;
  VarState& state(VarId var);

  std::vector<VarState> vars_;
  std::unordered_map<std::string, VarId> by_name_;
  std::uint64_t next_stamp_ = 1;
  std::size_t live_records_ = 0;
};

}  // namespace ufx

#endif  // UFX_DOMAIN_HPP
