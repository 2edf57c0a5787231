#include "arbor/service.hpp"

#include <cstdlib>

#include "arbor/error.hpp"
#include "arbor/pipeline.hpp"
#include "httplib.h"

namespace arbor {
namespace {

constexpr const char* kJson = "application/json; charset=utf-8";

// Served when no editor build is mounted.
constexpr const char* kFallbackPage = R"html(<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>Arbor compile service</title>
</head>
<body>
<main>
<h1>Arbor compile service</h1>
<p>The editor assets are not installed. Start the service with
<code>--static-dir</code> pointing at a built editor, or use the API directly:</p>
<ul>
<li><code>POST /api/compile</code> with a JSON compile request</li>
<li><code>GET /api/health</code></li>
</ul>
<form id="compile">
<label for="source">Diagram source</label>
<textarea id="source" rows="10" cols="60">flowchart TD
A((1))
A -->B((2))
B --> C((3))
B --> D((4))
A -->E((5))
E --> F((6))</textarea>
<button type="submit">Compile</button>
</form>
<section id="output" aria-live="polite"></section>
<script>
document.getElementById('compile').addEventListener('submit', async (ev) => {
  ev.preventDefault();
  const res = await fetch('/api/compile', {
    method: 'POST',
    headers: {'Content-Type': 'application/json'},
    body: JSON.stringify({source: document.getElementById('source').value,
                          language: 'mermaid', structure: 'binary_tree',
                          format: ['tabular', 'navigable']})
  });
  const body = await res.json();
  const out = document.getElementById('output');
  out.innerHTML = res.ok ? body.tabular.html + body.navigable.html
                         : '<p role="alert"></p>';
  if (!res.ok) out.firstChild.textContent = body.code + ': ' + body.message;
});
</script>
</main>
</body>
</html>
)html";

}  // namespace

HttpResponse handle_compile(const std::string& body) {
  try {
    const CompileRequest request = request_from_json(body);
    return {200, kJson, bundle_to_json(compile_request(request))};
  } catch (const Error& e) {
    int status = 422;
    if (e.code() == ErrorCode::BadRequest) status = 400;
    if (e.code() == ErrorCode::SourceTooLarge) status = 413;
    return {status, kJson, e.to_json()};
  }
}

struct Service::Impl {
  ServiceOptions options;
  httplib::Server server;
};

Service::Service(ServiceOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = std::move(options);
  auto& server = impl_->server;

  // Room for a maximal source plus JSON escaping; anything bigger is refused
  // by the server with 413 before it reaches the handler.
  server.set_payload_max_length(4 * kMaxSourceBytes);

  server.Post("/api/compile", [](const httplib::Request& req, httplib::Response& res) {
    const HttpResponse out = handle_compile(req.body);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  });
  server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("ok", "text/plain");
  });

  if (impl_->options.static_dir && server.set_mount_point("/", *impl_->options.static_dir)) {
    return;
  }
  server.Get("/", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(kFallbackPage, "text/html; charset=utf-8");
  });
}

Service::~Service() { stop(); }

int Service::bind(int port) {
  auto& server = impl_->server;
  if (port == 0) return server.bind_to_any_port(impl_->options.host);
  return server.bind_to_port(impl_->options.host, port) ? port : -1;
}

bool Service::run() { return impl_->server.listen_after_bind(); }

void Service::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

bool Service::is_running() const { return impl_->server.is_running(); }

int default_port(int fallback) {
  if (const char* env = std::getenv("ARBOR_PORT")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 65536) return static_cast<int>(v);
  }
  return fallback;
}

}  // namespace arbor
