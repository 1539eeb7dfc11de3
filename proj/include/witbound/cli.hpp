#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace witbound {

/// Exit codes shared by the subcommands: 0 detection / success, 1
/// inconclusive or failed checks, 2 bad input.
inline constexpr int kExitDetected = 0;
inline constexpr int kExitInconclusive = 1;
inline constexpr int kExitInputError = 2;

struct SweepArgs {
  std::string family;
  std::optional<double> x;
  double a_min = 0.0;
  double a_max = 1.0;
  int steps = 2;
  std::string out_path;
};

/// Loads a state file, evaluates every applicable bound and prints the
/// report (12 significant digits, "n/a" for inapplicable bounds) to `out`.
/// Returns 0 if the verdict is entangled, 1 if inconclusive, 2 on input
/// errors (diagnostic goes to `err`).
int cmd_bound(const std::string& state_path, std::ostream& out, std::ostream& err);

/// Runs a parameter sweep and writes the CSV to args.out_path. Returns 0 on
/// success, 2 on invalid arguments or an unwritable path.
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);

/// Runs the property suites, printing one line per suite plus a summary.
/// Returns 0 iff every suite passed, 1 otherwise, 2 for invalid arguments.
int cmd_selftest(std::uint64_t seed, int samples, std::ostream& out, std::ostream& err);

}  // namespace witbound
