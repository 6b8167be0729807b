#ifndef UFX_TERMINAL_HPP
#define UFX_TERMINAL_HPP

#include <iosfwd>

#include "ufx/problem.hpp"
#include "ufx/session.hpp"

namespace ufx {

void print_variables(const Solver& solver, std::ostream& out);
void print_tree(const Problem& problem, const BoxTree& tree, std::ostream& out);
void print_status(const Session& session, std::ostream& out);

/// Console negotiation loop: show the conflict, ask which block to relax,
/// and once solved offer to set relaxed blocks back. Returns 0 when the
/// dialogue ends on a solution, 2 when it ends on a conflict.
int run_interactive(Session& session, const Problem& problem, std::istream& in, std::ostream& out);

}  // namespace ufx

#endif  // UFX_TERMINAL_HPP
