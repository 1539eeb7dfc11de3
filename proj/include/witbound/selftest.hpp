#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "witbound/parallel.hpp"

namespace witbound {

/// Outcome of one property suite: how many of its checks passed, plus the
/// first few failure descriptions.
struct SuiteResult {
  std::string name;
  int passed = 0;
  int total = 0;
  std::vector<std::string> notes;

  bool ok() const { return passed == total; }
};

struct SelftestReport {
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<SuiteResult> suites;

  bool all_passed() const;
  int failed_suites() const;
};

/// Runs every property suite of the library (basis orthogonality, Bloch
/// round trips, norm identities, generator determinism, bound soundness on
/// separable states, closed-form versus variational oracle agreement, local
/// unitary invariance, continuity, convexity, CSV and exit-code contracts).
/// Sampled suites draw `samples` cases each from a deterministic per-suite
/// stream of `seed`; the report is identical for identical arguments in
/// either execution mode. If `log` is non-null a line per suite is written
/// as it completes. Never throws on check failures; they are recorded.
SelftestReport run_selftest(std::uint64_t seed, int samples,
                            ExecMode mode = default_exec_mode(),
                            std::ostream* log = nullptr);

}  // namespace witbound
