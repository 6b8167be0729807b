#include "ufx/terminal.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace ufx {

namespace {

std::string dots(std::size_t depth) { return "+" + std::string(4 + 2 * depth, '.'); }

// Reads one integer choice; EOF or garbage means "none".
std::size_t read_choice(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) return 0;
  try {
    auto v = std::stol(line);
    return v < 0 ? 0 : static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    return 0;
  }
}

void print_removals(const Session& s, const std::vector<Removal>& removed, std::ostream& out) {
  for (const auto& r : removed) {
    const auto id = *s.solver().find(r.constraint);
    out << "Removing constraint " << describe(s.solver().constraint(id).kind, s.solver().store())
        << " from " << r.box << "\n";
  }
}

void print_conflict(const Session& s, const std::vector<std::string>& codes, std::ostream& out) {
  for (std::size_t i = 0; i < codes.size(); ++i)
    out << i + 1 << ": [" << codes[i] << "] " << s.tree().node(codes[i]).label << "\n";
}

}  // namespace

void print_variables(const Solver& solver, std::ostream& out) {
  const auto& store = solver.store();
  out << "Variables : (";
  for (std::uint32_t v = 0; v < store.variable_count(); ++v) {
    const auto& d = store.decl({v});
    out << (v ? ", " : "") << d.name << ":[" << d.lower << ".." << d.upper << "]";
  }
  out << ")\n";
}

void print_tree(const Problem& problem, const BoxTree& tree, std::ostream& out) {
  out << "=== " << problem.name << " : description\n";
  auto walk = [&](auto& self, const std::string& code, std::size_t depth) -> void {
    const auto& n = tree.node(code);
    out << dots(depth) << "[" << n.code << "] " << n.label << "\n";
    for (const auto& child : n.children) self(self, child, depth + 1);
  };
  walk(walk, tree.root(), 0);
}

void print_status(const Session& session, std::ostream& out) {
  if (const auto* c = std::get_if<InConflict>(&session.status())) {
    out << "!!! A contradiction occurred because of :\n";
    print_conflict(session, c->projection, out);
  } else if (const auto* s = std::get_if<Solved>(&session.status())) {
    const auto& store = session.solver().store();
    out << "!!! A solution has now been obtained\n!!! (";
    for (std::uint32_t v = 0; v < store.variable_count(); ++v)
      out << (v ? ", " : "") << store.decl({v}).name << ":" << s->assignment.at({v});
    out << ")\n";
  }
}

int run_interactive(Session& session, const Problem& problem, std::istream& in, std::ostream& out) {
  print_variables(session.solver(), out);
  out << "\n";
  print_tree(problem, session.tree(), out);
  out << "\nSolving the problem ...\n";
  session.run();

  for (;;) {
    print_status(session, out);
    if (const auto* c = std::get_if<InConflict>(&session.status())) {
      out << "\n** Which block would you like to relax ? (1-" << c->projection.size()
          << " 0-none) " << std::flush;
      const auto choice = read_choice(in);
      out << "\n";
      if (choice == 0 || choice > c->projection.size()) return 2;
      print_removals(session, session.relax(choice).removed, out);
      out << "\n";
      continue;
    }

    if (session.relaxed().empty()) return 0;
    out << "\n!!! The following blocks have been relaxed\n";
    const auto relaxed = session.relaxed();
    for (std::size_t i = 0; i < relaxed.size(); ++i) {
      const auto& code = relaxed[i].code;
      out << "  " << i + 1 << " : [" << code << " - " << session.tree().constraints_under(code).size()
          << " cts] " << session.tree().node(code).label << "\n";
    }
    out << "Which one would you like to set back ? (1-" << relaxed.size() << " 0-none) "
        << std::flush;
    const auto choice = read_choice(in);
    out << "\n";
    if (choice == 0 || choice > relaxed.size()) return 0;
    auto outcome = session.restore(relaxed[choice - 1].code);
    if (!outcome.restored) {
      out << "!!! [" << relaxed[choice - 1].code << "] cannot be set back because of :\n";
      print_conflict(session, outcome.conflict, out);
      out << "\n";
    } else if (!outcome.extra_removals.empty()) {
      out << "In order to do that some constraints need to be removed:\n";
      print_removals(session, outcome.extra_removals, out);
      out << "\n";
    }
  }
}

}  // namespace ufx
