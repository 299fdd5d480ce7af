#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fintop {

struct CheckTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<std::string> first_failure;
};

struct SuiteReport {
  std::string name;
  std::size_t samples = 0;
  std::vector<CheckTally> checks;
  /// Counters that are not pass/fail, e.g. how many samples were invariant.
  std::vector<std::pair<std::string, std::size_t>> stats;

  bool passed() const;
  const CheckTally* check(const std::string& name) const;
  std::size_t stat(const std::string& name) const;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  /// Trials are sharded over this many threads; results are merged in
  /// trial order, so reports do not depend on it.
  unsigned workers = 1;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<SuiteReport> suites;

  bool passed() const;
};

// Each trial draws from Rng(derive_seed(seed, suite_id << 32 | trial)).
SuiteReport verify_finspace(std::uint64_t seed, std::size_t samples, unsigned workers = 1);
SuiteReport verify_topology(std::uint64_t seed, std::size_t samples, unsigned workers = 1);
SuiteReport verify_decomposition(std::uint64_t seed, std::size_t samples, unsigned workers = 1);
SuiteReport verify_identity(std::uint64_t seed, std::size_t samples, unsigned workers = 1);
SuiteReport verify_cells(std::uint64_t seed, std::size_t samples, unsigned workers = 1);
/// `samples` random fields on each of the octahedron and torus meshes.
SuiteReport verify_reeb(std::uint64_t seed, std::size_t samples, unsigned workers = 1);
SuiteReport verify_analogs();

/// Runs every suite: finspace, identity and cells get trials/5 samples,
/// reeb trials/10 fields per mesh, the rest `trials`.
VerifyReport verify_all(const VerifyOptions& options);

}  // namespace fintop
