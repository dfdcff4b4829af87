// Copyright 2026 The tqc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Minimal shell helpers for exercising the CLI binary from tests.

#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace tqc::test {

struct CmdResult {
  int exit_code;
  std::string out;  // captured stdout
};

/// Run a shell command, capturing stdout.  Stderr passes through unless the
/// command redirects it.
inline CmdResult run_shell(const std::string &cmd) {
  CmdResult r{-1, {}};
  FILE *p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

inline std::string cli_path() { return TQC_CLI_PATH; }

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path make_temp_dir(const std::string &tag) {
  auto dir = std::filesystem::temp_directory_path() /
             ("tqc_test_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

inline void write_file(const std::filesystem::path &p, const std::string &s) {
  std::ofstream f(p, std::ios::binary);
  f << s;
}

}  // namespace tqc::test
