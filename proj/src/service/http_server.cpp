#include "segdesc/service/http_server.hpp"

#include <httplib.h>

#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace segdesc::service {

namespace {

std::atomic<bool> stop_requested{false};

extern "C" void on_signal(int) { stop_requested.store(true); }

void respond(Service& service, const httplib::Request& req, httplib::Response& res) {
  const auto out = service.handle(req.method, req.path, req.body);
  res.status = out.status;
  for (const auto& [k, v] : out.headers) res.set_header(k, v);
  res.set_header("Access-Control-Allow-Origin", "*");
  res.set_header("Access-Control-Allow-Headers", "Content-Type");
  res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
  res.set_header("Access-Control-Expose-Headers", "Location, X-Session-Revision");
  if (!out.body.empty()) res.set_content(out.body, "application/json");
}

} // namespace

int run_server(const ServerOptions& options) {
  Service service;
  if (options.snapshot && std::filesystem::exists(*options.snapshot)) {
    std::ifstream in(*options.snapshot);
    std::stringstream text;
    text << in.rdbuf();
    service.store().restore(io::Json::parse(text.str()));
    std::cerr << "restored " << service.store().size() << " sessions from " << options.snapshot->string() << "\n";
  }

  httplib::Server server;
  const auto handler = [&service](const httplib::Request& req, httplib::Response& res) { respond(service, req, res); };
  const std::string any = R"(/.*)";
  server.Get(any, handler);
  server.Post(any, handler);
  server.Options(any, handler);

  if (!server.bind_to_port(options.host, options.port)) {
    std::cerr << "cannot listen on " << options.host << ":" << options.port << "\n";
    return 1;
  }
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::jthread watcher([&server](std::stop_token token) {
    while (!token.stop_requested() && !stop_requested.load()) std::this_thread::sleep_for(std::chrono::milliseconds(100));
    server.stop();
  });
  std::cerr << "listening on http://" << options.host << ":" << options.port << "\n";
  server.listen_after_bind();
  watcher.request_stop();
  watcher.join();

  if (options.snapshot) {
    std::ofstream out(*options.snapshot);
    out << service.store().snapshot().dump(2) << "\n";
    std::cerr << "wrote snapshot to " << options.snapshot->string() << "\n";
  }
  return 0;
}

} // namespace segdesc::service
