#pragma once

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace sublat::testing {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

/// Runs a shell command, capturing stdout; stderr is dropped.
inline CliResult run_command(const std::string& command) {
  CliResult r;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string cli_path() {
#ifdef SUBLAT_CLI_PATH
  return SUBLAT_CLI_PATH;
#else
  throw std::runtime_error("SUBLAT_CLI_PATH not defined");
#endif
}

/// Runs the sublat binary with the given argument string.
inline CliResult run_cli(const std::string& args, const std::string& env = "") {
  return run_command(env.empty() ? cli_path() + " " + args
                                 : env + " " + cli_path() + " " + args);
}

inline std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

}  // namespace sublat::testing
