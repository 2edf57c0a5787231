#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace arbor::testing {

struct ProcessResult {
  int status = -1;  // exit code, or -1 when killed by a signal
  std::string out;
  std::string err;
};

/// Runs argv[0] with the given arguments through /bin/sh, feeding `input` on
/// stdin, with `cwd` as the working directory.
ProcessResult run_process(const std::vector<std::string>& argv, const std::string& input,
                          const std::filesystem::path& cwd);

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::filesystem::path& file);
void spit(const std::filesystem::path& file, const std::string& data);

}  // namespace arbor::testing
