#pragma once

#include <memory>
#include <optional>
#include <string>

namespace arbor {

struct ServiceOptions {
  std::string host = "127.0.0.1";
  // Directory holding the built editor. When unset, a small built-in page is
  // served at "/".
  std::optional<std::string> static_dir;
};

struct HttpResponse {
  int status = 200;
  std::string content_type;
  std::string body;
};

/// Handles one POST /api/compile body: 200 with the bundle JSON, 400 for a
/// malformed request, 413 for an oversized source, 422 with the error record
/// for parse/compile failures.
HttpResponse handle_compile(const std::string& body);

/// Local compile service:
///   POST /api/compile   CompileRequest JSON -> OutputBundle JSON
///   GET  /api/health    "ok"
///   GET  /*             editor assets
/// Handlers share no mutable state.
class Service {
 public:
  explicit Service(ServiceOptions options = {});
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds the listener; port 0 picks a free port. Returns the bound port or
  /// -1 on failure.
  int bind(int port);
  /// Blocks serving requests until stop().
  bool run();
  void stop();
  bool is_running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Port from $ARBOR_PORT, else `fallback`.
int default_port(int fallback = 8080);

}  // namespace arbor
