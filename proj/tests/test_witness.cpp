#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "doctest.h"
#include "witbound/bloch.hpp"
#include "witbound/linalg.hpp"
#include "witbound/states.hpp"
#include "witbound/types.hpp"
#include "witbound/witness.hpp"

using namespace witbound;

namespace {

StateVector bell_state() {
  ComplexVector amp(4);
  const double s = 1.0 / std::sqrt(2.0);
  amp << Complex(s, 0), Complex(0, 0), Complex(0, 0), Complex(s, 0);
  return make_state(2, 2, amp);
}

StateVector max_entangled_3x3() {
  ComplexVector amp = ComplexVector::Zero(9);
  amp(0) = amp(4) = amp(8) = Complex(1.0 / std::sqrt(3.0), 0.0);
  return make_state(3, 3, amp);
}

ComplexMatrix correlation_only(const RealMatrix& r, int d1, int d2) {
  BlochForm form;
  form.d1 = d1;
  form.d2 = d2;
  form.s = RealVector::Zero(d1 * d1 - 1);
  form.t = RealVector::Zero(d2 * d2 - 1);
  form.R = r;
  return bloch_compose(form);
}

}  // namespace

TEST_CASE("separable maximum of rank-1 operators from Schmidt weight") {
  ComplexVector prod = ComplexVector::Zero(4);
  prod(0) = 1.0;
  CHECK(alpha_rank_one(make_state(2, 2, prod)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(alpha_rank_one(bell_state()) == doctest::Approx(0.5).epsilon(1e-12));

  ComplexVector fam(4);
  fam << 1, 0, 0, 1.0 / std::sqrt(2.0);
  fam /= fam.norm();
  CHECK(alpha_rank_one(make_state(2, 2, fam)) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("correlation-only separable maximum on pinned operators") {
  CHECK(alpha_correlation(0.25 * ComplexMatrix::Identity(4, 4), 2, 2) ==
        doctest::Approx(0.25).epsilon(1e-14));
  CHECK(alpha_correlation(ComplexMatrix::Identity(9, 9) / 9.0, 3, 3) ==
        doctest::Approx(1.0 / 9.0).epsilon(1e-14));

  CHECK(alpha_correlation(projector(bell_state()).rho, 2, 2) ==
        doctest::Approx(0.5).epsilon(1e-12));

  RealMatrix half = RealMatrix::Zero(3, 3);
  half(0, 0) = 0.5;
  half(1, 1) = -0.5;
  half(2, 2) = 0.5;
  CHECK(alpha_correlation(correlation_only(half, 2, 2), 2, 2) ==
        doctest::Approx(0.375).epsilon(1e-12));
}

TEST_CASE("correlation formula reproduces the exact rank-1 maximum on the 3x3 flagship") {
  // the maximally entangled projector has vanishing local parts, so both
  // closed forms apply and must agree: 1/9 + (4/81)*3*(3/2) = 1/3
  const ComplexMatrix L = projector(max_entangled_3x3()).rho;
  const double via_correlation = alpha_correlation(L, 3, 3);
  const double via_schmidt = alpha_rank_one(max_entangled_3x3());
  CHECK(via_correlation == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(via_correlation == doctest::Approx(via_schmidt).epsilon(1e-12));
}

TEST_CASE("correlation formula rejects operators with local Bloch components") {
  ComplexMatrix prod = ComplexMatrix::Zero(4, 4);
  prod(0, 0) = 1.0;  // |00><00| has s = t = (0,0,1)
  CHECK_THROWS_AS(alpha_correlation(prod, 2, 2), std::invalid_argument);
}

TEST_CASE("variational ascent reproduces pinned separable maxima") {
  CHECK(alpha_variational(0.25 * ComplexMatrix::Identity(4, 4), 2, 2) ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(alpha_variational(projector(bell_state()).rho, 2, 2, 20) ==
        doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("variational ascent matches the qubit correlation form and stays below the ceiling") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    const ComplexMatrix l22 = random_correlation_L(2, 2, seed);
    const double closed = alpha_correlation(l22, 2, 2);
    const double var = alpha_variational(l22, 2, 2, 20);
    CHECK(std::abs(var - closed) < 1e-8);
  }
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const ComplexMatrix l33 = random_correlation_L(3, 3, seed);
    const double closed = alpha_correlation(l33, 3, 3);
    const double var = alpha_variational(l33, 3, 3, 20);
    CHECK(var <= closed + 1e-8);
    CHECK(var >= 1.0 / 9.0 - 1e-9);
  }
}

TEST_CASE("variational ascent validates its input") {
  ComplexMatrix m = 0.25 * ComplexMatrix::Identity(4, 4);
  m(0, 1) = Complex(0.0, 0.3);
  CHECK_THROWS_AS(alpha_variational(m, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(alpha_variational(ComplexMatrix::Identity(4, 4) * 0.25, 2, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(alpha_variational(ComplexMatrix::Identity(4, 4) * 0.25, 2, 2, 0),
                  std::invalid_argument);
}

TEST_CASE("random correlation operators satisfy the correlation-form preconditions") {
  for (auto [d1, d2] : {std::pair{2, 2}, std::pair{3, 3}, std::pair{2, 3}}) {
    const ComplexMatrix L = random_correlation_L(d1, d2, 31);
    CHECK(std::abs(L.trace() - Complex(1.0, 0.0)) < 1e-12);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(L, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() >= 0.0);
    const BlochForm form = bloch_decompose(L, d1, d2);
    CHECK(form.s.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(form.t.cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("assembled witnesses reproduce the pinned Bell expectations") {
  const ComplexMatrix L = projector(bell_state()).rho;
  const WitnessOperator w = build_witness(L, 2, 2, 0.5);
  CHECK(witness_expectation(w, projector(bell_state())) == doctest::Approx(0.5).epsilon(1e-12));

  ComplexVector prod = ComplexVector::Zero(4);
  prod(0) = 1.0;
  CHECK(std::abs(witness_expectation(w, projector(make_state(2, 2, prod)))) < 1e-12);

  // L = I/4 with its exact separable maximum gives the zero witness
  const WitnessOperator flat = build_witness(0.25 * ComplexMatrix::Identity(4, 4), 2, 2, 0.25);
  CHECK(flat.W.cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("witness assembly rejects operators outside the feasible set") {
  ComplexMatrix notpsd = ComplexMatrix::Zero(4, 4);
  notpsd(0, 0) = 1.5;
  notpsd(1, 1) = -0.5;  // trace 1 but indefinite
  CHECK_THROWS_AS(build_witness(notpsd, 2, 2, 0.5), std::invalid_argument);

  CHECK_THROWS_AS(build_witness(ComplexMatrix::Identity(4, 4), 2, 2, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_witness(0.25 * ComplexMatrix::Identity(4, 4), 2, 2, -0.1),
                  std::invalid_argument);
}

TEST_CASE("witness expectation requires matching dimensions") {
  const WitnessOperator w = build_witness(0.25 * ComplexMatrix::Identity(4, 4), 2, 2, 0.25);
  CHECK_THROWS_AS(witness_expectation(w, random_density(2, 3, 1)), std::invalid_argument);
}
