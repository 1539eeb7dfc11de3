#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "witbound/parallel.hpp"
#include "witbound/selftest.hpp"
#include "witbound/states.hpp"
#include "witbound/sweep.hpp"
#include "witbound/types.hpp"
#include "witbound/witness.hpp"

using namespace witbound;

namespace {

std::vector<double> fill_squares(ExecMode mode, std::int64_t n) {
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  parallel_for(mode, n, [&](std::int64_t i) { out[static_cast<std::size_t>(i)] = double(i) * double(i); });
  return out;
}

bool rows_identical(const std::vector<SweepRow>& a, const std::vector<SweepRow>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].a != b[i].a) return false;
    if (a[i].pure != b[i].pure) return false;
    if (a[i].mixed != b[i].mixed) return false;
    if (a[i].qubit != b[i].qubit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("both execution lanes fill identical buffers") {
  const auto serial = fill_squares(ExecMode::Serial, 257);
  const auto openmp = fill_squares(ExecMode::OpenMP, 257);
  CHECK(serial == openmp);
  CHECK(serial[16] == 256.0);
}

TEST_CASE("exceptions thrown inside the loop body reach the caller in both lanes") {
  for (ExecMode mode : {ExecMode::Serial, ExecMode::OpenMP}) {
    CHECK_THROWS_AS(parallel_for(mode, 64,
                                 [](std::int64_t i) {
                                   if (i == 37) throw std::runtime_error("item 37");
                                 }),
                    std::runtime_error);
  }
}

TEST_CASE("sweep grids are bitwise identical across execution lanes") {
  for (SweepFamily family :
       {SweepFamily::Pure2x2, SweepFamily::Mixed2x2, SweepFamily::Pure3x3, SweepFamily::Mixed3x3}) {
    SweepRequest req;
    req.family = family;
    if (family_is_mixed(family)) req.x = 0.1;
    req.a_min = 0.0;
    req.a_max = 1.5;
    req.steps = 17;
    const auto serial = sweep_rows(req, ExecMode::Serial);
    const auto openmp = sweep_rows(req, ExecMode::OpenMP);
    CHECK(rows_identical(serial, openmp));
    CHECK(csv_text(serial) == csv_text(openmp));
  }
}

TEST_CASE("variational product maximum is bitwise stable across execution lanes") {
  const ComplexMatrix L = random_correlation_L(3, 3, 11);
  const double serial = alpha_variational(L, 3, 3, 12, 500, 7, ExecMode::Serial);
  const double openmp = alpha_variational(L, 3, 3, 12, 500, 7, ExecMode::OpenMP);
  CHECK(serial == openmp);  // exact: restarts write into slots, max over slots
}

TEST_CASE("diagnostic suite results do not depend on the execution lane") {
  const SelftestReport serial = run_selftest(9001, 10, ExecMode::Serial);
  const SelftestReport openmp = run_selftest(9001, 10, ExecMode::OpenMP);
  REQUIRE(serial.suites.size() == openmp.suites.size());
  for (std::size_t i = 0; i < serial.suites.size(); ++i) {
    CHECK(serial.suites[i].name == openmp.suites[i].name);
    CHECK(serial.suites[i].passed == openmp.suites[i].passed);
    CHECK(serial.suites[i].total == openmp.suites[i].total);
  }
  CHECK(serial.all_passed());
}

TEST_CASE("sweep CSV matches the frozen golden text") {
  SweepRequest req;
  req.family = SweepFamily::Pure2x2;
  req.a_min = 0.0;
  req.a_max = 1.0;
  req.steps = 3;
  const std::string expected =
      "a,bound_thm2,bound_thm4,bound_thm5\n"
      "0,0,0,0\n"
      "0.5,0.471404520791,0.136082763488,0.471404520791\n"
      "1,0.471404520791,0.136082763488,0.471404520791\n";
  CHECK(csv_text(sweep_rows(req)) == expected);
}

TEST_CASE("default execution lane uses the build's threading support") {
#ifdef _OPENMP
  CHECK(default_exec_mode() == ExecMode::OpenMP);
#else
  CHECK(default_exec_mode() == ExecMode::Serial);
#endif
}
