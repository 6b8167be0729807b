#include "ufx/service.hpp"

#include <sstream>
#include <vector>

#include "ufx/errors.hpp"
#include "ufx/problem_io.hpp"

namespace ufx {

using nlohmann::json;

namespace {

Response reply(int status, const json& body) { return {status, body.dump()}; }

Response error(int status, const std::string& message) {
  return reply(status, json{{"error", message}});
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::stringstream ss(path.substr(0, path.find('?')));
  std::string part;
  while (std::getline(ss, part, '/'))
    if (!part.empty()) parts.push_back(part);
  return parts;
}

// Empty bodies count as {}.
std::optional<json> parse_body(const std::string& body) {
  if (body.find_first_not_of(" \t\r\n") == std::string::npos) return json::object();
  auto j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  return j;
}

json removals_json(const std::vector<Removal>& removed, const Session& s) {
  json out = json::array();
  for (const auto& r : removed) {
    const auto id = *s.solver().find(r.constraint);
    out.push_back({{"box", r.box},
                   {"constraint", r.constraint},
                   {"text", describe(s.solver().constraint(id).kind, s.solver().store())}});
  }
  return out;
}

json conflict_json(const std::vector<std::string>& codes, const BoxTree& tree) {
  json out = json::array();
  for (std::size_t i = 0; i < codes.size(); ++i)
    out.push_back({{"index", i + 1}, {"code", codes[i]}, {"label", tree.node(codes[i]).label}});
  return out;
}

}  // namespace

Service::Service(Problem problem) : problem_(std::move(problem)) {
  auto full = to_json(problem_);
  problem_json_ = json{{"name", problem_.name},
                       {"variables", full["variables"]},
                       {"tree", tree_to_json(problem_.hierarchy, problem_)},
                       {"views", full["views"]}};
}

std::shared_ptr<Service::Entry> Service::lookup(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

json Service::state_json(const std::string& id, const Session& s) const {
  const auto& store = s.solver().store();
  json relaxed = json::array();
  for (const auto& r : s.relaxed())
    relaxed.push_back({{"code", r.code},
                       {"label", s.tree().node(r.code).label},
                       {"constraint_ids", r.constraints}});
  json out{{"session_id", id},
           {"view", s.view().name},
           {"cut", s.view().boxes},
           {"policy", to_string(s.policy())},
           {"relaxed", relaxed},
           {"conflict", json::array()}};
  if (const auto* solved = std::get_if<Solved>(&s.status())) {
    out["status"] = "solved";
    json sol = json::object();
    for (std::uint32_t v = 0; v < store.variable_count(); ++v)
      sol[store.decl({v}).name] = solved->assignment.at({v});
    out["solution"] = sol;
    return out;
  }
  if (const auto* c = std::get_if<InConflict>(&s.status())) {
    out["status"] = "conflict";
    out["conflict"] = conflict_json(c->projection, s.tree());
    out["explanation"] = constraint_names(c->raw, s.solver());
  } else {
    out["status"] = "idle";
  }
  json domains = json::object();
  for (std::uint32_t v = 0; v < store.variable_count(); ++v)
    domains[store.decl({v}).name] = store.values({v});
  out["domains"] = domains;
  return out;
}

Response Service::handle_request(const std::string& method, const std::string& path,
                                 const std::string& body) {
  const auto parts = split_path(path);
  if (parts.size() < 2 || parts[0] != "api") return error(404, "no such endpoint");

  if (parts[1] == "problem" && parts.size() == 2) {
    if (method != "GET") return error(405, "method not allowed");
    return reply(200, problem_json_);
  }
  if (parts[1] != "sessions") return error(404, "no such endpoint");

  if (parts.size() == 2) {
    if (method != "POST") return error(405, "method not allowed");
    auto req = parse_body(body);
    if (!req) return error(400, "malformed JSON body");
    auto view = req->value("view", std::string{});
    auto policy_text = req->value("policy", std::string{"all"});
    auto policy = parse_policy(policy_text);
    if (!policy) return error(400, "unknown policy '" + policy_text + "'");
    try {
      auto session = Session::start(problem_, view, *policy);
      std::string id;
      {
        std::lock_guard lock(mutex_);
        id = "s" + std::to_string(next_id_++);
        sessions_.emplace(id, std::make_shared<Entry>(std::move(session)));
      }
      auto entry = lookup(id);
      std::lock_guard lock(entry->mutex);
      return reply(201, state_json(id, entry->session));
    } catch (const InputError& e) {
      return error(400, e.what());
    }
  }

  const auto& id = parts[2];
  auto entry = lookup(id);
  if (!entry) return error(404, "unknown session '" + id + "'");
  std::lock_guard lock(entry->mutex);
  auto& session = entry->session;

  if (parts.size() == 3) {
    if (method != "GET") return error(405, "method not allowed");
    return reply(200, state_json(id, session));
  }
  if (parts.size() != 4) return error(404, "no such endpoint");
  if (method != "POST") return error(405, "method not allowed");
  auto req = parse_body(body);
  if (!req) return error(400, "malformed JSON body");
  const auto& action = parts[3];

  try {
    if (action == "run") {
      session.run();
      return reply(200, state_json(id, session));
    }
    if (action == "relax") {
      if (!std::holds_alternative<InConflict>(session.status()))
        return error(409, "session has no conflict to relax");
      auto it = req->find("index");
      if (it == req->end() || !it->is_number_integer() || it->get<long long>() < 0)
        return error(400, "'index' must be a non-negative integer");
      std::optional<RelaxPolicy> override_policy;
      if (req->contains("policy")) {
        const auto& pj = (*req)["policy"];
        if (!pj.is_string() || !(override_policy = parse_policy(pj.get<std::string>())))
          return error(400, "unknown policy");
      }
      const auto index = it->get<std::size_t>();
      const auto size = std::get<InConflict>(session.status()).projection.size();
      if (index > size) return error(400, "index out of range");
      auto report = session.relax(index, override_policy);
      auto out = state_json(id, session);
      out["removed"] = removals_json(report.removed, session);
      return reply(200, out);
    }
    if (action == "restore") {
      auto it = req->find("code");
      if (it == req->end() || !it->is_string()) return error(400, "'code' must be a string");
      const auto code = it->get<std::string>();
      if (!session.is_relaxed(code)) return error(409, "box '" + code + "' is not relaxed");
      auto outcome = session.restore(code);
      auto out = state_json(id, session);
      out["outcome"] = outcome.restored ? "restored" : "refused";
      out["extra_removals"] = removals_json(outcome.extra_removals, session);
      out["refused_conflict"] = conflict_json(outcome.conflict, session.tree());
      return reply(200, out);
    }
  } catch (const PreconditionError& e) {
    return error(409, e.what());
  } catch (const InputError& e) {
    return error(400, e.what());
  }
  return error(404, "no such action '" + action + "'");
}

}  // namespace ufx
