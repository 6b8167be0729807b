#ifndef UFX_PROBLEM_IO_HPP
#define UFX_PROBLEM_IO_HPP

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ufx/problem.hpp"

namespace ufx {

/// Parses a problem file. Errors are InputError with a "line N" or JSON
/// pointer diagnostic. `gt` constraints are normalised to geq_plus, k = 1.
[[nodiscard]] Problem load_problem(std::string_view text);
[[nodiscard]] Problem load_problem_file(const std::string& path);

[[nodiscard]] nlohmann::json to_json(const Problem& problem);
[[nodiscard]] std::string serialize_problem(const Problem& problem);

/// Hierarchy as {code, label, constraints:[{id, kind, args, text}], children}.
[[nodiscard]] nlohmann::json tree_to_json(const BoxSpec& box, const Problem& problem);

}  // namespace ufx

#endif  // UFX_PROBLEM_IO_HPP
