#pragma once

// Small popen wrapper used by the CLI tests and the acceptance gate to run
// the command-line binary and capture its stdout and exit status.

#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

struct ProcResult {
  int exit_code = -1;
  std::string out;
};

inline ProcResult run_process(const std::string& command) {
  ProcResult r;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + command);
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int status = ::pclose(pipe);
  if (WIFEXITED(status)) {
    r.exit_code = WEXITSTATUS(status);
  } else {
    r.exit_code = -1;
  }
  return r;
}
