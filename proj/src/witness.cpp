#include "witbound/witness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "witbound/bloch.hpp"
#include "witbound/linalg.hpp"
#include "witbound/rng.hpp"

namespace witbound {

namespace {

// one alternating-ascent run from a random product start; returns the final
// objective <a b|L|a b>
double ascend_once(const ComplexMatrix& L, int d1, int d2, SplitMix64& rng, int max_iters) {
  ComplexVector a = haar_vector(d1, rng);
  ComplexVector b = haar_vector(d2, rng);
  double value = 0.0;
  double prev = -1.0;
  for (int iter = 0; iter < max_iters; ++iter) {
    ComplexMatrix ma = ComplexMatrix::Zero(d1, d1);
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d1; ++j) {
        Complex acc = 0.0;
        for (int k = 0; k < d2; ++k)
          for (int l = 0; l < d2; ++l)
            acc += std::conj(b(k)) * L(i * d2 + k, j * d2 + l) * b(l);
        ma(i, j) = acc;
      }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> esa(ma);
    a = esa.eigenvectors().col(d1 - 1);

    ComplexMatrix mb = ComplexMatrix::Zero(d2, d2);
    for (int k = 0; k < d2; ++k)
      for (int l = 0; l < d2; ++l) {
        Complex acc = 0.0;
        for (int i = 0; i < d1; ++i)
          for (int j = 0; j < d1; ++j)
            acc += std::conj(a(i)) * L(i * d2 + k, j * d2 + l) * a(j);
        mb(k, l) = acc;
      }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> esb(mb);
    b = esb.eigenvectors().col(d2 - 1);
    value = esb.eigenvalues()(d2 - 1);

    if (value - prev < 1e-12 * std::max(1.0, std::abs(value))) break;
    prev = value;
  }
  return value;
}

}  // namespace

double alpha_rank_one(const StateVector& psi) {
  return schmidt_coefficients(psi)(0);
}

double alpha_correlation(const ComplexMatrix& L, int d1, int d2) {
  const BlochForm form = bloch_decompose(L, d1, d2);
  const double local_max =
      std::max(form.s.size() ? form.s.cwiseAbs().maxCoeff() : 0.0,
               form.t.size() ? form.t.cwiseAbs().maxCoeff() : 0.0);
  if (local_max > tol::hermiticity) {
    std::ostringstream msg;
    msg << "alpha_correlation: local Bloch components must vanish, max |s|,|t| = " << local_max;
    throw std::invalid_argument(msg.str());
  }
  const double radius_a = std::sqrt(0.5 * d1 * (d1 - 1));
  const double radius_b = std::sqrt(0.5 * d2 * (d2 - 1));
  ComplexMatrix rc = form.R.cast<Complex>();
  const double dd = static_cast<double>(d1) * d2;
  return 1.0 / dd + (4.0 / (dd * dd)) * radius_a * radius_b * spectral_norm(rc);
}

double alpha_variational(const ComplexMatrix& L, int d1, int d2, int restarts, int max_iters,
                         std::uint64_t seed, ExecMode mode) {
  const Eigen::Index dim = static_cast<Eigen::Index>(d1) * d2;
  if (d1 < 2 || d2 < 2 || L.rows() != dim || L.cols() != dim) {
    throw std::invalid_argument("alpha_variational: operator shape does not match d1*d2");
  }
  if ((L - L.adjoint()).cwiseAbs().maxCoeff() > tol::hermiticity) {
    throw std::invalid_argument("alpha_variational: operator must be Hermitian");
  }
  if (restarts < 1 || max_iters < 1) {
    throw std::invalid_argument("alpha_variational: restarts and max_iters must be >= 1");
  }
  std::vector<double> results(restarts);
  parallel_for(mode, restarts, [&](std::int64_t r) {
    SplitMix64 rng(seed, static_cast<std::uint64_t>(r));
    results[static_cast<std::size_t>(r)] = ascend_once(L, d1, d2, rng, max_iters);
  });
  return *std::max_element(results.begin(), results.end());
}

ComplexMatrix random_correlation_L(int d1, int d2, std::uint64_t seed) {
  if (d1 < 2 || d2 < 2) {
    throw std::invalid_argument("random_correlation_L: dimensions must be >= 2");
  }
  const int n1 = d1 * d1 - 1;
  const int n2 = d2 * d2 - 1;
  SplitMix64 rng(seed, 0);
  RealMatrix r0(n1, n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) r0(i, j) = rng.gaussian();

  BlochForm form;
  form.d1 = d1;
  form.d2 = d2;
  form.s = RealVector::Zero(n1);
  form.t = RealVector::Zero(n2);
  form.R = r0;
  const ComplexMatrix raw = bloch_compose(form);
  // compose gives (1/(d1 d2))(I + K); shrinking R by 0.9/||K||_2 keeps the
  // smallest eigenvalue of I + K strictly positive
  const double dd = static_cast<double>(d1) * d2;
  const ComplexMatrix k_part =
      dd * raw - ComplexMatrix::Identity(raw.rows(), raw.cols());
  const double knorm = spectral_norm(k_part);
  form.R = (knorm > 0.0 ? 0.9 / knorm : 1.0) * r0;
  return bloch_compose(form);
}

WitnessOperator build_witness(const ComplexMatrix& L, int d1, int d2, double alpha) {
  const Eigen::Index dim = static_cast<Eigen::Index>(d1) * d2;
  if (d1 < 2 || d2 < 2 || L.rows() != dim || L.cols() != dim) {
    throw std::invalid_argument("build_witness: operator shape does not match d1*d2");
  }
  const double herm = (L - L.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol::hermiticity) {
    std::ostringstream msg;
    msg << "build_witness: L not Hermitian, max |L - L^dag| = " << herm;
    throw std::invalid_argument(msg.str());
  }
  const double tr_dev = std::abs(L.trace() - Complex(1.0, 0.0));
  if (tr_dev > tol::trace) {
    std::ostringstream msg;
    msg << "build_witness: tr(L) deviates from 1 by " << tr_dev;
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(L, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol::psd_slack) {
    std::ostringstream msg;
    msg << "build_witness: L not positive semidefinite, min eigenvalue = " << min_eig;
    throw std::invalid_argument(msg.str());
  }
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw std::invalid_argument("build_witness: alpha must be finite and >= 0");
  }
  WitnessOperator w;
  w.d1 = d1;
  w.d2 = d2;
  w.alpha = alpha;
  w.trace_target = 1.0;
  w.L = L;
  w.W = alpha * ComplexMatrix::Identity(dim, dim) - L;
  return w;
}

double witness_expectation(const WitnessOperator& w, const DensityMatrix& rho) {
  if (w.d1 != rho.d1 || w.d2 != rho.d2) {
    throw std::invalid_argument("witness_expectation: witness and state dimensions differ");
  }
  return -(w.W * rho.rho).trace().real();
}

}  // namespace witbound
