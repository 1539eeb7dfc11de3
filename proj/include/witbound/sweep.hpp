#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "witbound/parallel.hpp"

namespace witbound {

/// One-parameter state families the sweep command can walk.
enum class SweepFamily {
  Pure2x2,   // |psi(a)> ~ a|00> + (1/sqrt(2))|11>
  Mixed2x2,  // isotropic mixture of the 2x2 pure family
  Pure3x3,   // |psi(a)> ~ a|00> + (1/sqrt(3))(|11> + |22>)
  Mixed3x3,  // isotropic mixture of the 3x3 pure family
};

/// Maps the CLI family token ("pure2x2", "mixed2x2", "pure3x3", "mixed3x3")
/// to its enumerator; empty optional for anything else.
std::optional<SweepFamily> parse_family(std::string_view name);

/// True for the isotropic-mixture families, which need a mixing weight x.
bool family_is_mixed(SweepFamily family);

struct SweepRequest {
  SweepFamily family;
  std::optional<double> x;  // mixing weight, required iff family_is_mixed
  double a_min = 0.0;
  double a_max = 1.0;
  int steps = 2;
};

/// One grid point. Absent optionals mean the corresponding certificate does
/// not apply to the family (e.g. the pure-state bound on mixed states) and
/// its CSV cell stays empty.
struct SweepRow {
  double a = 0.0;
  std::optional<double> pure;
  std::optional<double> mixed;
  std::optional<double> qubit;
};

/// Evaluates every applicable lower bound on the uniform grid
/// a_i = a_min + i*(a_max - a_min)/(steps - 1). Throws std::invalid_argument
/// on a malformed request (steps < 2, a_min >= a_max, missing or out-of-range
/// x). Rows are independent work items; both execution modes produce
/// bitwise-identical results.
std::vector<SweepRow> sweep_rows(const SweepRequest& request,
                                 ExecMode mode = default_exec_mode());

/// Serializes rows to CSV with the fixed header
/// "a,bound_thm2,bound_thm4,bound_thm5", 12 significant digits, LF line
/// endings and empty cells for inapplicable bounds.
std::string csv_text(const std::vector<SweepRow>& rows);

}  // namespace witbound
