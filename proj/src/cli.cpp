#include "witbound/cli.hpp"

#include <exception>
#include <fstream>
#include <ostream>

#include "witbound/bounds.hpp"
#include "witbound/format.hpp"
#include "witbound/selftest.hpp"
#include "witbound/state_io.hpp"
#include "witbound/sweep.hpp"

namespace witbound {

int cmd_bound(const std::string& state_path, std::ostream& out, std::ostream& err) {
  DensityMatrix rho;
  try {
    rho = load_state_file(state_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  const BoundReport rep = evaluate(rho);
  out << "d1: " << rep.d1 << '\n';
  out << "d2: " << rep.d2 << '\n';
  out << "purity: " << format_sig(rep.purity) << '\n';
  out << "bound_pure: " << (rep.bound_pure ? format_sig(*rep.bound_pure) : "n/a") << '\n';
  out << "bound_mixed: " << format_sig(rep.bound_mixed) << '\n';
  out << "bound_qubit: " << (rep.bound_qubit ? format_sig(*rep.bound_qubit) : "n/a") << '\n';
  out << "best: " << format_sig(rep.best) << '\n';
  out << "verdict: " << (rep.entangled ? "entangled" : "inconclusive") << '\n';
  return rep.entangled ? kExitDetected : kExitInconclusive;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  const std::optional<SweepFamily> family = parse_family(args.family);
  if (!family) {
    err << "error: unknown family '" << args.family
        << "' (expected pure2x2, mixed2x2, pure3x3 or mixed3x3)\n";
    return kExitInputError;
  }

  SweepRequest request;
  request.family = *family;
  request.x = args.x;
  request.a_min = args.a_min;
  request.a_max = args.a_max;
  request.steps = args.steps;

  std::vector<SweepRow> rows;
  try {
    rows = sweep_rows(request);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  std::ofstream file(args.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file '" << args.out_path << "'\n";
    return kExitInputError;
  }
  file << csv_text(rows);
  file.flush();
  if (!file) {
    err << "error: write failed for '" << args.out_path << "'\n";
    return kExitInputError;
  }
  out << "wrote " << rows.size() << " rows to " << args.out_path << '\n';
  return 0;
}

int cmd_selftest(std::uint64_t seed, int samples, std::ostream& out, std::ostream& err) {
  if (samples < 1) {
    err << "error: samples must be >= 1\n";
    return kExitInputError;
  }
  const SelftestReport report = run_selftest(seed, samples, default_exec_mode(), &out);
  if (report.all_passed()) {
    out << "all " << report.suites.size() << " suites passed (seed " << seed << ", samples "
        << samples << ")\n";
    return 0;
  }
  out << report.failed_suites() << " of " << report.suites.size() << " suites failed (seed "
      << seed << ", samples " << samples << ")\n";
  return kExitInconclusive;
}

}  // namespace witbound
