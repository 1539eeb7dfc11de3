#include "witbound/sweep.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "witbound/bounds.hpp"
#include "witbound/format.hpp"
#include "witbound/states.hpp"
#include "witbound/types.hpp"

namespace witbound {

namespace {

SweepRow compute_row(const SweepRequest& request, double a) {
  SweepRow row;
  row.a = a;
  switch (request.family) {
    case SweepFamily::Pure2x2: {
      StateVector psi = pure_family_2x2(a);
      DensityMatrix rho = projector(psi);
      row.pure = bound_pure(psi);
      row.mixed = bound_mixed(rho);
      row.qubit = bound_qubit(rho);
      break;
    }
    case SweepFamily::Mixed2x2: {
      DensityMatrix rho = isotropic_mix(*request.x, pure_family_2x2(a));
      row.mixed = bound_mixed(rho);
      row.qubit = bound_qubit(rho);
      break;
    }
    case SweepFamily::Pure3x3: {
      StateVector psi = pure_family_3x3(a);
      row.pure = bound_pure(psi);
      row.mixed = bound_mixed(projector(psi));
      break;
    }
    case SweepFamily::Mixed3x3: {
      DensityMatrix rho = isotropic_mix(*request.x, pure_family_3x3(a));
      row.mixed = bound_mixed(rho);
      break;
    }
  }
  return row;
}

}  // namespace

std::optional<SweepFamily> parse_family(std::string_view name) {
  if (name == "pure2x2") return SweepFamily::Pure2x2;
  if (name == "mixed2x2") return SweepFamily::Mixed2x2;
  if (name == "pure3x3") return SweepFamily::Pure3x3;
  if (name == "mixed3x3") return SweepFamily::Mixed3x3;
  return std::nullopt;
}

bool family_is_mixed(SweepFamily family) {
  return family == SweepFamily::Mixed2x2 || family == SweepFamily::Mixed3x3;
}

std::vector<SweepRow> sweep_rows(const SweepRequest& request, ExecMode mode) {
  if (request.steps < 2) {
    throw std::invalid_argument("sweep: steps must be at least 2, got " +
                                std::to_string(request.steps));
  }
  if (!std::isfinite(request.a_min) || !std::isfinite(request.a_max) ||
      request.a_min >= request.a_max) {
    std::ostringstream msg;
    msg << "sweep: need a_min < a_max, got [" << request.a_min << ", "
        << request.a_max << "]";
    throw std::invalid_argument(msg.str());
  }
  if (family_is_mixed(request.family)) {
    if (!request.x) {
      throw std::invalid_argument("sweep: mixed families require a mixing weight x");
    }
    if (!(*request.x >= 0.0 && *request.x <= 1.0)) {
      throw std::invalid_argument("sweep: mixing weight x must lie in [0, 1], got " +
                                  std::to_string(*request.x));
    }
  } else if (request.x) {
    throw std::invalid_argument("sweep: pure families take no mixing weight x");
  }

  const int steps = request.steps;
  const double width = request.a_max - request.a_min;
  std::vector<SweepRow> rows(static_cast<std::size_t>(steps));
  parallel_for(mode, steps, [&](std::int64_t i) {
    const double a =
        request.a_min + width * (static_cast<double>(i) / (steps - 1));
    rows[static_cast<std::size_t>(i)] = compute_row(request, a);
  });
  return rows;
}

std::string csv_text(const std::vector<SweepRow>& rows) {
  std::string out = "a,bound_thm2,bound_thm4,bound_thm5\n";
  for (const SweepRow& row : rows) {
    out += format_sig(row.a);
    out += ',';
    if (row.pure) out += format_sig(*row.pure);
    out += ',';
    if (row.mixed) out += format_sig(*row.mixed);
    out += ',';
    if (row.qubit) out += format_sig(*row.qubit);
    out += '\n';
  }
  return out;
}

}  // namespace witbound
