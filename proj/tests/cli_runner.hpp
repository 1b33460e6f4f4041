#pragma once

// Runs the commgraph executable and captures stdout and the exit status.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <regex>
#include <string>

#ifndef COMMGRAPH_CLI_PATH
#error "COMMGRAPH_CLI_PATH must name the commgraph executable"
#endif

namespace test_support {

  struct CliResult {
    int         code = -1;
    std::string out;
  };

  inline CliResult run_cli(std::string const& args) {
    std::string cmd = std::string("'") + COMMGRAPH_CLI_PATH + "' " + args + " 2>/dev/null";
    CliResult   r;
    FILE*       pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
      return r;
    }
    std::array<char, 4096> buf;
    std::size_t            got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
      r.out.append(buf.data(), got);
    }
    int status = pclose(pipe);
    r.code     = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  // Blanks every elapsed_ms value so timing noise does not affect comparisons.
  inline std::string mask_elapsed(std::string const& json_text) {
    static std::regex const re("(\"elapsed_ms\"\\s*:\\s*)[-0-9.eE+]+");
    return std::regex_replace(json_text, re, "$1#");
  }

}  // namespace test_support
