// ufx: solve a hierarchical constraint problem and negotiate its conflicts.
//
//   ufx solve <file> [--view NAME] [--policy all|in-explanation]
//                    [--interactive] [--serve PORT [--ui DIR]]
//
// Exit codes: 0 solved, 2 over-constrained (non-interactive), 1 error.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <httplib.h>

#include "ufx/errors.hpp"
#include "ufx/hierarchy.hpp"
#include "ufx/problem_io.hpp"
#include "ufx/service.hpp"
#include "ufx/session.hpp"
#include "ufx/terminal.hpp"

namespace {

struct SolveOptions {
  std::string file;
  std::string view;
  std::string policy = "all";
  bool interactive = false;
  int port = 0;
  std::string ui_dir;
};

int serve(ufx::Problem problem, const SolveOptions& opts) {
  ufx::Service service(std::move(problem));
  httplib::Server server;
  auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
    auto r = service.handle_request(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  server.Get(R"(/api/.*)", forward);
  server.Post(R"(/api/.*)", forward);
  if (!opts.ui_dir.empty() && !server.set_mount_point("/", opts.ui_dir)) {
    std::cerr << "ufx: cannot serve UI directory '" << opts.ui_dir << "'\n";
    return 1;
  }
  std::cerr << "ufx: serving '" << service.problem().name << "' on http://127.0.0.1:" << opts.port
            << "\n";
  if (!server.listen("0.0.0.0", opts.port)) {
    std::cerr << "ufx: cannot listen on port " << opts.port << "\n";
    return 1;
  }
  return 0;
}

int solve(const SolveOptions& opts) {
  auto problem = ufx::load_problem_file(opts.file);
  if (problem.views.empty()) problem.views.push_back({"root", {problem.hierarchy.code}});
  const auto policy = ufx::parse_policy(opts.policy);
  if (!policy) throw ufx::InputError("unknown policy '" + opts.policy + "'");

  if (opts.port > 0) return serve(std::move(problem), opts);

  const auto view = opts.view.empty() ? problem.views.front().name : opts.view;
  auto session = ufx::Session::start(problem, view, *policy);
  if (opts.interactive) return ufx::run_interactive(session, problem, std::cin, std::cout);

  session.run();
  ufx::print_status(session, std::cout);
  if (const auto* c = std::get_if<ufx::InConflict>(&session.status())) {
    std::cout << "explanation:";
    for (const auto& id : ufx::constraint_names(c->raw, session.solver())) std::cout << " " << id;
    std::cout << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explanation-based constraint solving with user-friendly conflict views"};
  app.require_subcommand(1);

  SolveOptions opts;
  auto* cmd = app.add_subcommand("solve", "Solve a problem file");
  cmd->add_option("file", opts.file, "Problem file (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--view", opts.view, "View (cut) used to present conflicts");
  cmd->add_option("--policy", opts.policy, "Relaxation policy")
      ->check(CLI::IsMember({"all", "in-explanation"}));
  cmd->add_flag("--interactive", opts.interactive, "Negotiate conflicts on the terminal");
  cmd->add_option("--serve", opts.port, "Serve the HTTP/JSON API on this port")
      ->check(CLI::Range(1, 65535));
  cmd->add_option("--ui", opts.ui_dir, "Static web client directory to serve with --serve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    return solve(opts);
  } catch (const std::exception& e) {
    std::cerr << "ufx: " << e.what() << "\n";
    return 1;
  }
}
