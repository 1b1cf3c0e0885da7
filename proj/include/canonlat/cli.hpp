#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace canonlat::cli {

enum ExitCode : int { Ok = 0, VerificationFailed = 1, InputError = 2 };

struct Config {
  std::string command;
  std::string input;
  long depth = -1;  // -1: command default
  long cap = 200000;
  std::string format;
  std::uint64_t seed = 7;
  std::string suite = "all";
  bool quotient = false;
  bool hyperbolic = false;
  std::string report;  // write the machine report here as well
  bool dump = false;
};

/// `args` excludes the program name. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Convenience wrapper for main().
int run(int argc, char** argv);

}  // namespace canonlat::cli
