#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace ncp::cli {

enum class Format { Json, SignVector, Signed, Off };

struct RunConfig {
  std::string command;
  std::size_t n = 0;
  std::size_t d = 0;
  std::optional<std::size_t> r;
  std::optional<std::string> epsilon;  // "p/q", parsed by run()
  Format format = Format::Json;
  std::string output;                  // empty: write to `out`
  bool oracle = true;                  // verify: run the hull oracle
};

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kError = 3,
};

/// Executes one subcommand. Results go to config.output (or `out`), usage
/// problems to `err`. Library errors become a JSON error record.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ncp::cli
