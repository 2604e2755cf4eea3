#pragma once

#include "segdesc/service/session_store.hpp"

#include <map>
#include <string>

namespace segdesc::service {

struct Response {
  int status = 200;
  std::string body;
  std::map<std::string, std::string> headers;
};

/// Transport-independent request handling. Analysis bodies are exactly the
/// bytes the command line prints with --format json.
class Service {
public:
  Response handle(const std::string& method, const std::string& path, const std::string& body);

  SessionStore& store() { return store_; }

private:
  Response create_session(const std::string& body);
  Response get_session(Session& session);
  Response revise(Session& session, const std::string& body);
  Response analyze(Session& session, const std::string& body);
  Response get_analysis(Session& session, const std::string& index);

  SessionStore store_;
};

} // namespace segdesc::service
