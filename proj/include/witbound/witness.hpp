#pragma once

#include <cstdint>

#include "witbound/parallel.hpp"
#include "witbound/types.hpp"

namespace witbound {

/// W = alpha I - L for a positive semidefinite unit-trace L. By construction
/// tr(W sigma) >= 0 for every separable sigma when alpha is (an upper bound
/// on) the separable expectation maximum of L, so a negative tr(W rho)
/// certifies entanglement of rho.
struct WitnessOperator {
  int d1 = 0;
  int d2 = 0;
  double alpha = 0.0;
  double trace_target = 1.0;  // tr(L)
  ComplexMatrix L;
  ComplexMatrix W;
};

/// Separable maximum of L = |psi><psi|: the largest squared Schmidt
/// coefficient of psi. Exact in every dimension.
double alpha_rank_one(const StateVector& psi);

/// Separable maximum bound for an L whose local Bloch components vanish
/// (s = t = 0 within tolerance, checked; throws otherwise):
///
///   alpha = 1/(d1 d2) + (4/(d1^2 d2^2)) * k * ||R_L||_2,
///   k = sqrt(d1(d1-1)/2) * sqrt(d2(d2-1)/2).
///
/// k is the norm of a pure state's local Bloch vector, so the product
/// maximum of s^T R_L t over local Bloch vectors is bounded by k*||R_L||_2.
/// For qubit pairs k = 1, every unit vector is a pure-state Bloch vector, and
/// the bound is the exact maximum; for larger local dimension the pure-state
/// Bloch set is a proper subset of its sphere and the value is a strict
/// upper bound on generic input (the witness stays valid either way).
double alpha_correlation(const ComplexMatrix& L, int d1, int d2);

/// Independent numerical route: alternating eigenvector ascent of
/// <a (x) b| L |a (x) b> over product states, best of `restarts`
/// random initializations. Monotone per half-step; a restart stops when the
/// relative objective gain drops below 1e-12 or after max_iters sweeps.
/// Converges to the true product maximum for generic starts, which the
/// closed forms above must match on their exact domains.
double alpha_variational(const ComplexMatrix& L, int d1, int d2, int restarts = 20,
                         int max_iters = 500, std::uint64_t seed = 77,
                         ExecMode mode = default_exec_mode());

/// Random unit-trace positive semidefinite operator with vanishing local
/// Bloch components, suitable input for alpha_correlation. Built from a
/// Gaussian correlation matrix scaled so the composed operator stays
/// positive. Deterministic in the seed.
ComplexMatrix random_correlation_L(int d1, int d2, std::uint64_t seed);

/// Validates L (Hermitian, positive semidefinite, unit trace) and alpha
/// (finite, >= 0), then assembles W = alpha I - L.
WitnessOperator build_witness(const ComplexMatrix& L, int d1, int d2, double alpha);

/// -tr(W rho): the certified contribution of this witness to the
/// entanglement measure. Positive values detect entanglement; separable
/// states give values <= 0 up to numerical slack.
double witness_expectation(const WitnessOperator& w, const DensityMatrix& rho);

}  // namespace witbound
