#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace fintop {

struct RunConfig {
  /// classify, elements, morse, decomp, cell, reeb or verify.
  std::string subcommand;
  std::optional<std::string> input;
  /// space, decomp, complex or mesh; defaults per subcommand.
  std::optional<std::string> format;
  std::optional<std::string> dot_path;
  /// Report destination; standard output when unset.
  std::optional<std::string> json_path;
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  unsigned workers = 1;
};

/// Exit status: 0 success, 1 failed check or internal error, 2 input error.
/// Diagnostics go to `err` as a single line starting with "error:".
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fintop
