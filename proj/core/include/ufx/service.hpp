#ifndef UFX_SERVICE_HPP
#define UFX_SERVICE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include <nlohmann/json.hpp>

#include "ufx/problem.hpp"
#include "ufx/session.hpp"

namespace ufx {

struct Response {
  int status = 200;
  std::string body;  // JSON
};

/// HTTP-shaped JSON API over negotiation sessions for one loaded problem.
///
///   GET  /api/problem
///   POST /api/sessions                 {view, policy}
///   GET  /api/sessions/{id}
///   POST /api/sessions/{id}/run
///   POST /api/sessions/{id}/relax      {index[, policy]}
///   POST /api/sessions/{id}/restore    {code}
///
/// Transport-agnostic; the CLI mounts it on an HTTP server. Requests on one
/// session are serialized, distinct sessions proceed independently.
class Service {
 public:
  explicit Service(Problem problem);

  Response handle_request(const std::string& method, const std::string& path,
                          const std::string& body);

  [[nodiscard]] const Problem& problem() const { return problem_; }

 private:
  struct Entry {
    std::mutex mutex;
    Session session;
    explicit Entry(Session s) : session(std::move(s)) {}
  };

  std::shared_ptr<Entry> lookup(const std::string& id);
  nlohmann::json state_json(const std::string& id, const Session& s) const;

  Problem problem_;
  nlohmann::json problem_json_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t next_id_ = 1;
};

}  // namespace ufx

#endif  // UFX_SERVICE_HPP
