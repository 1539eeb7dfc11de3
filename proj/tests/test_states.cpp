#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "doctest.h"
#include "witbound/bloch.hpp"
#include "witbound/linalg.hpp"
#include "witbound/states.hpp"
#include "witbound/types.hpp"

using namespace witbound;

TEST_CASE("2x2 family endpoints and the balanced point") {
  const StateVector zero = pure_family_2x2(0.0);
  CHECK(std::abs(zero.amp(3) - Complex(1.0, 0.0)) < 1e-15);
  CHECK(zero.amp.head(3).cwiseAbs().maxCoeff() < 1e-15);

  // a = 1/sqrt(2) balances the two amplitudes into a maximally entangled state
  const StateVector bal = pure_family_2x2(1.0 / std::sqrt(2.0));
  CHECK(std::abs(bal.amp(0) - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-12);
  CHECK(std::abs(bal.amp(3) - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-12);
  CHECK(std::abs(bal.amp(1)) + std::abs(bal.amp(2)) < 1e-15);

  const StateVector one = pure_family_2x2(1.0);
  const RealVector mu = schmidt_coefficients(one);
  CHECK(mu(0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("3x3 family stays normalized with the expected support") {
  for (double a : {0.0, 0.4, 1.0, 2.0}) {
    const StateVector psi = pure_family_3x3(a);
    CHECK(psi.amp.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(psi.amp(1)) + std::abs(psi.amp(2)) + std::abs(psi.amp(3)) +
              std::abs(psi.amp(5)) + std::abs(psi.amp(6)) + std::abs(psi.amp(7)) <
          1e-15);
    CHECK(std::abs(psi.amp(4) - psi.amp(8)) < 1e-15);
  }
}

TEST_CASE("family parameters must be finite and nonnegative") {
  CHECK_THROWS_AS(pure_family_2x2(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(pure_family_3x3(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(pure_family_2x2(std::nan("")), std::invalid_argument);
}

TEST_CASE("isotropic mixing endpoints reproduce the projector and the flat state") {
  const StateVector psi = pure_family_2x2(0.8);
  const DensityMatrix pureend = isotropic_mix(0.0, psi);
  CHECK((pureend.rho - projector(psi).rho).cwiseAbs().maxCoeff() < 1e-15);

  const DensityMatrix flat = isotropic_mix(1.0, psi);
  CHECK((flat.rho - 0.25 * ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(isotropic_mix(-0.01, psi), std::invalid_argument);
  CHECK_THROWS_AS(isotropic_mix(1.01, psi), std::invalid_argument);
}

TEST_CASE("isotropic mixing scales the Bell correlation matrix by 1 - x") {
  const StateVector bell = pure_family_2x2(1.0 / std::sqrt(2.0));
  const BlochForm form = bloch_decompose(isotropic_mix(0.1, bell).rho, 2, 2);
  RealMatrix want(3, 3);
  want << 0.9, 0, 0, 0, -0.9, 0, 0, 0, 0.9;
  CHECK((form.R - want).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("seeded generators are reproducible and seed-sensitive") {
  const StateVector a = random_pure(3, 3, 123);
  const StateVector b = random_pure(3, 3, 123);
  REQUIRE(a.amp.size() == b.amp.size());
  for (Eigen::Index k = 0; k < a.amp.size(); ++k) CHECK(a.amp(k) == b.amp(k));

  const StateVector c = random_pure(3, 3, 124);
  CHECK((a.amp - c.amp).cwiseAbs().maxCoeff() > 1e-3);

  const DensityMatrix r1 = random_density(2, 3, 55);
  const DensityMatrix r2 = random_density(2, 3, 55);
  for (Eigen::Index k = 0; k < r1.rho.size(); ++k) CHECK(r1.rho(k) == r2.rho(k));
}

TEST_CASE("random product states have Schmidt rank 1") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const StateVector psi = random_product_pure(2, 3, seed);
    CHECK(psi.amp.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(schmidt_coefficients(psi)(0) >= 1.0 - 1e-12);
  }
}

TEST_CASE("random separable mixtures are valid densities of the requested size") {
  for (int k : {1, 2, 4}) {
    const DensityMatrix rho = random_separable_mixed(3, 3, k, 99 + k);
    CHECK(rho.d1 == 3);
    CHECK(rho.d2 == 3);
    CHECK_NOTHROW(make_density(3, 3, rho.rho));
    if (k == 1) CHECK(purity(rho) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(random_separable_mixed(2, 2, 0, 1), std::invalid_argument);
}

TEST_CASE("random densities are strictly positive with unit trace") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const DensityMatrix rho = random_density(2, 2, seed);
    CHECK(std::abs(rho.rho.trace() - Complex(1.0, 0.0)) < 1e-12);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.rho, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() > 1e-12);
  }
}

TEST_CASE("first amplitude of Haar samples has the right second moment") {
  const int n = 2000;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += std::norm(random_pure(2, 2, 1000 + i).amp(0));
  CHECK(std::abs(acc / n - 0.25) < 0.02);
}

TEST_CASE("local unitary pairs are unitary and conjugation preserves the spectrum") {
  const auto [ua, ub] = random_local_unitary_pair(2, 3, 7);
  CHECK((ua.adjoint() * ua - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((ub.adjoint() * ub - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);

  const DensityMatrix rho = random_density(2, 3, 8);
  const DensityMatrix rot = conjugate_local(rho, ua, ub);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> e1(rho.rho, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> e2(rot.rho, Eigen::EigenvaluesOnly);
  CHECK((e1.eigenvalues() - e2.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);

  CHECK_THROWS_AS(conjugate_local(rho, ub, ua), std::invalid_argument);
}
