// arborc: batch compiler and local compile service.
//
//   arborc compile --lang mermaid --structure binary-tree --format all in.mmd --out-dir out/
//   arborc serve --port 8080 [--host 0.0.0.0] [--static-dir web/dist]
//
// Exit codes: 0 success, 1 parse/compile error (JSON record on stderr),
// 2 usage error.

#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <pthread.h>

#include "CLI11.hpp"
#include "arbor/error.hpp"
#include "arbor/pipeline.hpp"
#include "arbor/service.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCompile = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

// Raised for filesystem failures after inputs were accepted.
struct IoError {
  std::string message;
};

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_file_or_usage(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{std::string("cannot read ") + what + " '" + path + "'"};
  return read_all(in);
}

std::string extension_for(arbor::OutputFormat f) {
  switch (f) {
    case arbor::OutputFormat::tabular: return ".table.html";
    case arbor::OutputFormat::navigable: return ".nav.html";
    case arbor::OutputFormat::tactile: return ".tactile.svg";
    case arbor::OutputFormat::ir: return ".ir.json";
    case arbor::OutputFormat::description: return ".txt";
  }
  return ".out";
}

std::string content_for(const arbor::OutputBundle& b, arbor::OutputFormat f) {
  switch (f) {
    case arbor::OutputFormat::tabular: return b.tabular->html;
    case arbor::OutputFormat::navigable: return b.navigable->html;
    case arbor::OutputFormat::tactile: return b.tactile->svg;
    case arbor::OutputFormat::ir: return b.ir_json;
    case arbor::OutputFormat::description: return b.description + "\n";
  }
  return {};
}

void write_file(const fs::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.close();
  if (!out) throw IoError{"cannot write '" + path.string() + "'"};
}

// Writes every file into a sibling staging directory first, then renames
// them into place so a failure never leaves a partial set behind.
void commit_outputs(const std::vector<std::pair<fs::path, std::string>>& outputs) {
  if (outputs.empty()) return;
  const fs::path dir = outputs.front().first.parent_path();
  std::string pattern = (dir / ".arborc-stage-XXXXXX").string();
  if (mkdtemp(pattern.data()) == nullptr) {
    throw IoError{"cannot create staging directory in '" + dir.string() + "'"};
  }
  const fs::path stage(pattern);
  std::error_code ec;
  try {
    for (const auto& [target, data] : outputs) write_file(stage / target.filename(), data);
    for (const auto& [target, data] : outputs) {
      fs::rename(stage / target.filename(), target, ec);
      if (ec) throw IoError{"cannot move output to '" + target.string() + "': " + ec.message()};
    }
  } catch (...) {
    fs::remove_all(stage, ec);
    throw;
  }
  fs::remove_all(stage, ec);
}

struct CompileOptions {
  std::string lang;
  std::string structure;
  std::vector<std::string> formats;
  std::string out_dir;
  std::string out_file;
  std::string title;
  std::string description;
  std::string tactile_config;
  std::string input;
};

int run_compile(const CompileOptions& opt, const CLI::App& cmd) {
  arbor::CompileRequest req;
  req.language = *arbor::parse_language(opt.lang);
  req.structure = *arbor::parse_structure(opt.structure);
  for (const auto& f : opt.formats) {
    if (f == "all") {
      req.formats.insert({arbor::OutputFormat::tabular, arbor::OutputFormat::navigable,
                          arbor::OutputFormat::tactile, arbor::OutputFormat::ir,
                          arbor::OutputFormat::description});
    } else {
      req.formats.insert(*arbor::parse_format(f));
    }
  }
  if (!opt.out_file.empty() && req.formats.size() != 1) {
    throw UsageError{"-o requires exactly one --format"};
  }
  if (cmd.count("--title")) req.meta.title = opt.title;
  if (cmd.count("--description")) req.meta.description = opt.description;

  if (opt.input.empty() || opt.input == "-") {
    req.source = read_all(std::cin);
  } else {
    req.source = read_file_or_usage(opt.input, "input");
  }
  if (!opt.tactile_config.empty()) {
    req.tactile_config =
        arbor::tactile_config_from_json(read_file_or_usage(opt.tactile_config, "tactile config"));
  }

  const arbor::OutputBundle bundle = arbor::compile_request(req);

  std::vector<std::pair<fs::path, std::string>> outputs;
  if (!opt.out_file.empty()) {
    const std::string data = content_for(bundle, *req.formats.begin());
    if (opt.out_file == "-") {
      std::cout << data << std::flush;
      return kExitOk;
    }
    const fs::path target = fs::absolute(opt.out_file);
    // Symlinks, devices and pipes are written in place; renaming over them
    // would replace the link or special file itself.
    std::error_code ec;
    const auto st = fs::symlink_status(target, ec);
    if (!ec && fs::exists(st) && !fs::is_regular_file(st)) {
      write_file(target, data);
      return kExitOk;
    }
    outputs.emplace_back(target, data);
  } else {
    const fs::path dir = fs::absolute(opt.out_dir.empty() ? "." : opt.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError{"cannot create '" + dir.string() + "': " + ec.message()};
    const std::string stem =
        (opt.input.empty() || opt.input == "-") ? "diagram" : fs::path(opt.input).stem().string();
    for (auto f : req.formats) {
      outputs.emplace_back(dir / (stem + extension_for(f)), content_for(bundle, f));
    }
  }
  commit_outputs(outputs);
  return kExitOk;
}

int run_serve(int port, const std::string& host, const std::string& static_dir) {
  arbor::ServiceOptions options;
  options.host = host;
  if (!static_dir.empty()) {
    if (!fs::is_directory(static_dir)) throw UsageError{"no such directory '" + static_dir + "'"};
    options.static_dir = static_dir;
  }

  // Handle SIGINT/SIGTERM on a dedicated thread so shutdown is not done from
  // inside a signal handler.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  arbor::Service service(options);
  const int bound = service.bind(port);
  if (bound < 0) {
    std::cerr << "cannot listen on " << host << ":" << port << "\n";
    return kExitCompile;
  }
  std::thread([&service, signals] {
    int sig = 0;
    sigwait(&signals, &sig);
    service.stop();
  }).detach();

  std::cerr << "arborc serving on http://" << host << ":" << bound << "/\n";
  service.run();
  return kExitOk;
}

std::string single_line_error(const std::string& code, const std::string& message) {
  nlohmann::ordered_json j{{"code", code}, {"message", message}, {"line", nullptr},
                           {"column", nullptr}};
  return j.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::replace);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile Mermaid/DOT data-structure diagrams into accessible outputs"};
  app.require_subcommand(1);

  CompileOptions copt;
  auto* compile = app.add_subcommand("compile", "Compile one diagram to files");
  compile->add_option("--lang", copt.lang, "Source language")
      ->required()
      ->check(CLI::IsMember({"mermaid", "dot"}));
  compile->add_option("--structure", copt.structure, "Data structure")
      ->required()
      ->check(CLI::IsMember({"array", "binary-tree"}));
  compile->add_option("--format", copt.formats, "Output format (repeatable)")
      ->required()
      ->allow_extra_args(false)
      ->check(CLI::IsMember({"tabular", "navigable", "tactile", "ir", "description", "all"}));
  auto* out_dir = compile->add_option("--out-dir", copt.out_dir, "Directory for output files");
  compile->add_option("-o", copt.out_file, "Output file, or - for stdout (single format only)")->excludes(out_dir);
  compile->add_option("--title", copt.title, "Diagram title");
  compile->add_option("--description", copt.description, "Author description");
  compile->add_option("--tactile-config", copt.tactile_config, "Tactile config JSON file");
  compile->add_option("input", copt.input, "Input file (default: stdin)");

  int port = arbor::default_port();
  std::string host = "127.0.0.1";
  std::string static_dir;
  auto* serve = app.add_subcommand("serve", "Run the local compile service");
  serve->add_option("--port", port, "Port (default: $ARBOR_PORT or 8080)")
      ->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--static-dir", static_dir, "Editor assets to serve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compile) return run_compile(copt, *compile);
    return run_serve(port, host, static_dir);
  } catch (const UsageError& e) {
    std::cerr << "arborc: " << e.message << "\n";
    return kExitUsage;
  } catch (const arbor::Error& e) {
    std::cerr << e.to_json() << "\n";
    return kExitCompile;
  } catch (const IoError& e) {
    std::cerr << single_line_error("IoError", e.message) << "\n";
    return kExitCompile;
  }
}
