#include "segdesc/service/service.hpp"

#include "segdesc/core/ordering.hpp"
#include "segdesc/core/sd_system.hpp"

#include <charconv>

namespace segdesc::service {

namespace {

Response json_response(int status, const io::Json& body) { return {status, body.dump(2) + "\n", {}}; }

Response error(int status, const std::string& type, const std::string& message, const std::string& location = {}) {
  return {status, io::render_json(io::error_report(type, message, location)), {}};
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  const std::string clean = path.substr(0, path.find('?'));
  while (start <= clean.size()) {
    const auto end = clean.find('/', start);
    const auto part = clean.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (!part.empty()) parts.push_back(part);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return parts;
}

io::Json parse_body(const std::string& body) {
  if (body.empty()) return io::Json::object();
  try {
    return io::Json::parse(body);
  } catch (const nlohmann::json::parse_error&) {
    throw io::ParseError("body", "invalid JSON");
  }
}

io::Json session_json(const Session& session) {
  const auto [doc, revision] = session.current();
  return io::Json{{"id", session.id()},
                  {"revision", revision},
                  {"document", io::problem_to_json(doc)},
                  {"analyses", session.stored_count()}};
}

} // namespace

Response Service::handle(const std::string& method, const std::string& path, const std::string& body) {
  const auto parts = split_path(path);
  if (method == "OPTIONS") return {204, "", {}};
  try {
    if (parts.empty() || parts[0] != "sessions") return error(404, "not-found", "no such resource: " + path);
    if (parts.size() == 1) {
      if (method != "POST") return error(405, "method", "use POST to create a session");
      return create_session(body);
    }
    const auto session = store_.find(parts[1]);
    if (!session) return error(404, "not-found", "no session " + parts[1]);
    if (parts.size() == 2) {
      if (method != "GET") return error(405, "method", "use GET to read a session");
      return get_session(*session);
    }
    if (parts.size() == 3 && parts[2] == "comparisons") {
      if (method != "POST") return error(405, "method", "use POST to edit comparisons");
      return revise(*session, body);
    }
    if (parts.size() == 3 && parts[2] == "analyses") {
      if (method != "POST") return error(405, "method", "use POST to run an analysis");
      return analyze(*session, body);
    }
    if (parts.size() == 4 && parts[2] == "analyses") {
      if (method != "GET") return error(405, "method", "use GET to read an analysis");
      return get_analysis(*session, parts[3]);
    }
    return error(404, "not-found", "no such resource: " + path);
  } catch (const io::ParseError& e) {
    return error(400, "parse", e.message(), e.location());
  } catch (const core::OrderingError& e) {
    return error(400, "parse", e.what(), "ordering");
  } catch (const EditRejected& e) {
    return error(400, "rejected", e.what(), e.location());
  } catch (const analysis::PreconditionError& e) {
    return error(409, "precondition", e.what());
  } catch (const core::SegmentLimitError& e) {
    return error(422, "limit", e.what());
  } catch (const std::exception& e) {
    return error(500, "internal", e.what());
  }
}

Response Service::create_session(const std::string& body) {
  const auto session = store_.create(io::parse_problem_json(body));
  auto response = json_response(201, session_json(*session));
  response.headers["Location"] = "/sessions/" + session->id();
  return response;
}

Response Service::get_session(Session& session) { return json_response(200, session_json(session)); }

Response Service::revise(Session& session, const std::string& body) {
  const auto edit = parse_edit(parse_body(body));
  const auto before = session.current().second;
  session.apply(edit);
  const auto [analyzer, revision] = session.analyzer();
  io::AnalysisRequest check;
  check.explain_all = true;
  return json_response(200, io::Json{{"id", session.id()},
                                     {"revision", revision},
                                     {"changed", revision != before},
                                     {"report", io::run_analysis(*analyzer, check).body}});
}

Response Service::analyze(Session& session, const std::string& body) {
  const auto request = io::parse_request(parse_body(body));
  const auto [analyzer, revision] = session.analyzer();
  auto text = io::render_json(io::run_analysis(*analyzer, request));
  const auto index = session.record({revision, request, text});
  Response response{200, std::move(text), {}};
  response.headers["X-Session-Revision"] = std::to_string(revision);
  response.headers["Location"] = "/sessions/" + session.id() + "/analyses/" + std::to_string(index);
  return response;
}

Response Service::get_analysis(Session& session, const std::string& index) {
  std::size_t n = 0;
  const auto [end, ec] = std::from_chars(index.data(), index.data() + index.size(), n);
  if (ec != std::errc{} || end != index.data() + index.size()) return error(404, "not-found", "no analysis " + index);
  const auto stored = session.stored(n);
  if (!stored) return error(404, "not-found", "no analysis " + index);
  Response response{200, stored->body, {}};
  response.headers["X-Session-Revision"] = std::to_string(stored->revision);
  return response;
}

} // namespace segdesc::service
