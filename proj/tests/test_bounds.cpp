#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "doctest.h"
#include "witbound/bloch.hpp"
#include "witbound/bounds.hpp"
#include "witbound/linalg.hpp"
#include "witbound/states.hpp"
#include "witbound/types.hpp"
#include "witbound/witness.hpp"

using namespace witbound;

namespace {

StateVector bell_state() { return pure_family_2x2(1.0 / std::sqrt(2.0)); }

StateVector max_entangled_3x3() {
  ComplexVector amp = ComplexVector::Zero(9);
  amp(0) = amp(4) = amp(8) = Complex(1.0 / std::sqrt(3.0), 0.0);
  return make_state(3, 3, amp);
}

const double kBellMixed = 1.0 / (4.0 * std::sqrt(3.0));  // 0.14433756729740646

}  // namespace

TEST_CASE("pure-state bound on pinned states") {
  ComplexVector prod = ComplexVector::Zero(4);
  prod(0) = 1.0;
  CHECK(std::abs(bound_pure(make_state(2, 2, prod))) < 1e-14);
  CHECK(bound_pure(bell_state()) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(bound_pure(max_entangled_3x3()) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  // family closed form sqrt(2) a / (2 a^2 + 1)
  for (double a : {0.3, 1.0, 1.7}) {
    CHECK(bound_pure(pure_family_2x2(a)) ==
          doctest::Approx(std::sqrt(2.0) * a / (2.0 * a * a + 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("correlation bound on pinned states") {
  CHECK(bound_mixed(make_density(2, 2, 0.25 * ComplexMatrix::Identity(4, 4))) == 0.0);
  CHECK(bound_mixed(projector(bell_state())) == doctest::Approx(kBellMixed).epsilon(1e-12));
  CHECK(bound_mixed(isotropic_mix(0.1, bell_state())) ==
        doctest::Approx(0.12268693220279543).epsilon(1e-12));

  // product pure state in 3x3: correlation trace norm equals the Bloch radius
  // product exactly, so the bound vanishes
  ComplexVector p9 = ComplexVector::Zero(9);
  p9(0) = 1.0;
  CHECK(std::abs(bound_mixed(projector(make_state(3, 3, p9)))) < 1e-8);

  // maximally entangled 3x3: trace norm 12, radius product 3, rank 8
  CHECK(bound_mixed(projector(max_entangled_3x3())) ==
        doctest::Approx(18.0 / (81.0 * std::sqrt(8.0))).epsilon(1e-12));
}

TEST_CASE("qubit bound on pinned states and its domain guard") {
  CHECK(bound_qubit(make_density(2, 2, 0.25 * ComplexMatrix::Identity(4, 4))) == 0.0);
  CHECK(bound_qubit(projector(bell_state())) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(bound_qubit(isotropic_mix(0.1, bell_state())) == doctest::Approx(0.425).epsilon(1e-12));

  CHECK_THROWS_AS(bound_qubit(random_density(2, 3, 1)), std::invalid_argument);
  CHECK_THROWS_AS(bound_qubit(random_density(3, 3, 1)), std::invalid_argument);
}

TEST_CASE("qubit bound flips the smallest singular value by determinant parity") {
  BlochForm form;
  form.d1 = form.d2 = 2;
  form.s = RealVector::Zero(3);
  form.t = RealVector::Zero(3);

  // Werner state, R = -0.8 I: det < 0, so the flip turns m1+m2-g m3-1 into
  // 0.8*3 - 1 = 1.4 and the bound is 1.4/4
  form.R = -0.8 * RealMatrix::Identity(3, 3);
  const DensityMatrix werner = make_density(2, 2, bloch_compose(form));
  CHECK(bound_qubit(werner) == doctest::Approx(0.35).epsilon(1e-12));

  // positive determinant forces the singular values of a physical
  // correlation matrix to sum to at most 1, so both candidates go negative
  form.R = 0.3 * RealMatrix::Identity(3, 3);
  CHECK(bound_qubit(make_density(2, 2, bloch_compose(form))) == 0.0);

  // vanishing determinant contributes g = 0, not a sign flip
  form.R = RealMatrix::Zero(3, 3);
  form.R(0, 0) = 0.5;
  form.R(1, 1) = 0.3;
  CHECK(bound_qubit(make_density(2, 2, bloch_compose(form))) == 0.0);
}

TEST_CASE("pure witness construction realizes its bound and hits the Bell projector") {
  const WitnessOperator w = construct_L_pure(bell_state());
  CHECK(w.alpha == doctest::Approx(0.5).epsilon(1e-12));
  CHECK((w.L - projector(bell_state()).rho).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(witness_expectation(w, projector(bell_state())) ==
        doctest::Approx(bound_pure(bell_state())).epsilon(1e-12));

  for (auto [d1, d2] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const StateVector psi = random_pure(d1, d2, 40 + seed);
      const WitnessOperator wp = construct_L_pure(psi);
      CHECK(std::abs(witness_expectation(wp, projector(psi)) - bound_pure(psi)) < 1e-10);
      CHECK(std::abs(wp.L.trace() - Complex(1.0, 0.0)) < 1e-10);
    }
  }
}

TEST_CASE("correlation witness construction realizes its bound") {
  const WitnessOperator w = construct_L_mixed(projector(bell_state()));
  CHECK(w.alpha == doctest::Approx(0.25 + 1.0 / (8.0 * std::sqrt(3.0))).epsilon(1e-12));
  CHECK(witness_expectation(w, projector(bell_state())) ==
        doctest::Approx(kBellMixed).epsilon(1e-12));

  for (auto [d1, d2] : {std::pair{2, 2}, std::pair{3, 3}, std::pair{2, 3}}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const DensityMatrix rho = random_density(d1, d2, 60 + seed);
      const WitnessOperator wm = construct_L_mixed(rho);
      CHECK(std::abs(witness_expectation(wm, rho) - bound_mixed(rho)) < 1e-10);
    }
  }
}

TEST_CASE("correlation witness normalizes a rank-1 correlation matrix to Frobenius 1/2") {
  ComplexMatrix prod = ComplexMatrix::Zero(4, 4);
  prod(0, 0) = 1.0;  // |00><00| has R = diag(0,0,1), rank 1
  const WitnessOperator w = construct_L_mixed(make_density(2, 2, prod));
  const BlochForm form = bloch_decompose(w.L, 2, 2);
  CHECK(form.R.norm() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("correlation witness construction needs a nonvanishing correlation matrix") {
  CHECK_THROWS_AS(construct_L_mixed(make_density(2, 2, 0.25 * ComplexMatrix::Identity(4, 4))),
                  std::invalid_argument);
}

TEST_CASE("qubit witness construction realizes its bound") {
  const WitnessOperator w = construct_L_qubit(projector(bell_state()));
  CHECK(w.alpha == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(witness_expectation(w, projector(bell_state())) == doctest::Approx(0.5).epsilon(1e-12));

  // flat state: every candidate scores zero, the zero vector wins, W = 0
  const DensityMatrix flat = make_density(2, 2, 0.25 * ComplexMatrix::Identity(4, 4));
  const WitnessOperator wf = construct_L_qubit(flat);
  CHECK(wf.alpha == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(wf.W.cwiseAbs().maxCoeff() < 1e-12);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = random_density(2, 2, 80 + seed);
    const WitnessOperator wq = construct_L_qubit(rho);
    CHECK(std::abs(witness_expectation(wq, rho) - bound_qubit(rho)) < 1e-10);
  }
  CHECK_THROWS_AS(construct_L_qubit(random_density(3, 3, 1)), std::invalid_argument);
}

TEST_CASE("full evaluation report on the Bell state") {
  const BoundReport rep = evaluate(projector(bell_state()));
  CHECK(rep.d1 == 2);
  CHECK(rep.d2 == 2);
  CHECK(rep.purity == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(rep.bound_pure.has_value());
  CHECK(*rep.bound_pure == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(rep.bound_mixed == doctest::Approx(kBellMixed).epsilon(1e-10));
  REQUIRE(rep.bound_qubit.has_value());
  CHECK(*rep.bound_qubit == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(rep.best == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(rep.entangled);
}

TEST_CASE("full evaluation report on the flat state stays inconclusive") {
  const BoundReport rep = evaluate(make_density(2, 2, 0.25 * ComplexMatrix::Identity(4, 4)));
  CHECK(rep.purity == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(!rep.bound_pure.has_value());
  CHECK(rep.bound_mixed == 0.0);
  REQUIRE(rep.bound_qubit.has_value());
  CHECK(*rep.bound_qubit == 0.0);
  CHECK(!rep.entangled);
}

TEST_CASE("evaluation exposes the pure bound only above the purity gate") {
  const StateVector psi = random_pure(2, 3, 5);
  const BoundReport pure_rep = evaluate(projector(psi));
  CHECK(pure_rep.bound_pure.has_value());
  CHECK(!pure_rep.bound_qubit.has_value());

  const BoundReport mixed_rep = evaluate(random_density(2, 3, 6));
  CHECK(!mixed_rep.bound_pure.has_value());
  CHECK(mixed_rep.best == mixed_rep.bound_mixed);
}

TEST_CASE("raw bounds stay below the gate on random separable states") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int k = 1 + static_cast<int>(seed % 4);
    const auto [d1, d2] = (seed % 2 == 0) ? std::pair{2, 2} : std::pair{3, 3};
    const BoundReport rep = evaluate(random_separable_mixed(d1, d2, k, 300 + seed));
    CHECK(rep.bound_mixed <= 1e-8);
    if (rep.bound_qubit) CHECK(*rep.bound_qubit <= 1e-8);
    if (rep.bound_pure) CHECK(*rep.bound_pure <= 1e-8);
    CHECK(!rep.entangled);
  }
}

TEST_CASE("detection bounds survive local unitary conjugation") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const DensityMatrix rho = random_density(2, 2, 400 + seed);
    const auto [ua, ub] = random_local_unitary_pair(2, 2, 500 + seed);
    const DensityMatrix rot = conjugate_local(rho, ua, ub);
    CHECK(std::abs(bound_mixed(rot) - bound_mixed(rho)) < 1e-9);
    CHECK(std::abs(bound_qubit(rot) - bound_qubit(rho)) < 1e-9);
  }
}
