#pragma once

#include "segdesc/service/service.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace segdesc::service {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  /// Restored on start when present, written on shutdown.
  std::optional<std::filesystem::path> snapshot;
};

/// Blocks until SIGINT or SIGTERM.
int run_server(const ServerOptions& options);

} // namespace segdesc::service
