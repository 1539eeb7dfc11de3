#include "witbound/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

#include "witbound/rng.hpp"

namespace witbound {

namespace {

// role offsets keep the rng streams of distinct draws inside one generator
// call from colliding
constexpr std::uint64_t kStreamA = 0;
constexpr std::uint64_t kStreamB = 1;
constexpr std::uint64_t kStreamWeights = 2;
constexpr std::uint64_t kStreamComponents = 16;

void require_nonneg_finite(double a, const char* who) {
  if (!std::isfinite(a) || a < 0.0) {
    std::ostringstream msg;
    msg << who << ": parameter a must be finite and >= 0, got " << a;
    throw std::invalid_argument(msg.str());
  }
}

ComplexMatrix haar_unitary(int d, SplitMix64& rng) {
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      g(i, j) = rng.gaussian_complex();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phase ambiguity so the distribution is Haar
  for (int j = 0; j < d; ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    q.col(j) *= (mag > 0.0) ? diag / mag : Complex(1.0, 0.0);
  }
  return q;
}

}  // namespace

StateVector pure_family_2x2(double a) {
  require_nonneg_finite(a, "pure_family_2x2");
  ComplexVector amp = ComplexVector::Zero(4);
  amp(0) = a;
  amp(3) = 1.0 / std::sqrt(2.0);
  amp /= amp.norm();
  return make_state(2, 2, std::move(amp));
}

StateVector pure_family_3x3(double a) {
  require_nonneg_finite(a, "pure_family_3x3");
  ComplexVector amp = ComplexVector::Zero(9);
  amp(0) = a;
  amp(4) = 1.0 / std::sqrt(3.0);
  amp(8) = 1.0 / std::sqrt(3.0);
  amp /= amp.norm();
  return make_state(3, 3, std::move(amp));
}

DensityMatrix isotropic_mix(double x, const StateVector& psi) {
  if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
    std::ostringstream msg;
    msg << "isotropic_mix: mixing weight x must lie in [0, 1], got " << x;
    throw std::invalid_argument(msg.str());
  }
  const Eigen::Index dim = static_cast<Eigen::Index>(psi.d1) * psi.d2;
  ComplexMatrix rho = (x / static_cast<double>(dim)) * ComplexMatrix::Identity(dim, dim) +
                      (1.0 - x) * (psi.amp * psi.amp.adjoint());
  return make_density(psi.d1, psi.d2, std::move(rho));
}

StateVector random_product_pure(int d1, int d2, std::uint64_t seed) {
  SplitMix64 rng_a(seed, kStreamA);
  SplitMix64 rng_b(seed, kStreamB);
  ComplexVector a = haar_vector(d1, rng_a);
  ComplexVector b = haar_vector(d2, rng_b);
  ComplexVector amp = Eigen::kroneckerProduct(a, b);
  return make_state(d1, d2, std::move(amp));
}

DensityMatrix random_separable_mixed(int d1, int d2, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("random_separable_mixed: component count k must be >= 1");
  SplitMix64 rng_w(seed, kStreamWeights);
  RealVector w(k);
  for (int i = 0; i < k; ++i) w(i) = -std::log(1.0 - rng_w.uniform());
  w /= w.sum();

  const Eigen::Index dim = static_cast<Eigen::Index>(d1) * d2;
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < k; ++i) {
    SplitMix64 rng_a(seed, kStreamComponents + 2 * static_cast<std::uint64_t>(i));
    SplitMix64 rng_b(seed, kStreamComponents + 2 * static_cast<std::uint64_t>(i) + 1);
    ComplexVector amp = Eigen::kroneckerProduct(haar_vector(d1, rng_a), haar_vector(d2, rng_b));
    rho += w(i) * (amp * amp.adjoint());
  }
  return make_density(d1, d2, std::move(rho));
}

StateVector random_pure(int d1, int d2, std::uint64_t seed) {
  SplitMix64 rng(seed, kStreamA);
  ComplexVector amp = haar_vector(d1 * d2, rng);
  return make_state(d1, d2, std::move(amp));
}

DensityMatrix random_density(int d1, int d2, std::uint64_t seed) {
  SplitMix64 rng(seed, kStreamA);
  const Eigen::Index dim = static_cast<Eigen::Index>(d1) * d2;
  ComplexMatrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      g(i, j) = rng.gaussian_complex();
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return make_density(d1, d2, std::move(rho));
}

std::pair<ComplexMatrix, ComplexMatrix> random_local_unitary_pair(int d1, int d2,
                                                                  std::uint64_t seed) {
  SplitMix64 rng_a(seed, kStreamA);
  SplitMix64 rng_b(seed, kStreamB);
  return {haar_unitary(d1, rng_a), haar_unitary(d2, rng_b)};
}

DensityMatrix conjugate_local(const DensityMatrix& rho, const ComplexMatrix& ua,
                              const ComplexMatrix& ub) {
  if (ua.rows() != rho.d1 || ua.cols() != rho.d1 || ub.rows() != rho.d2 || ub.cols() != rho.d2) {
    throw std::invalid_argument("conjugate_local: unitary shapes do not match local dimensions");
  }
  ComplexMatrix u = Eigen::kroneckerProduct(ua, ub);
  ComplexMatrix out = u * rho.rho * u.adjoint();
  return make_density(rho.d1, rho.d2, std::move(out));
}

}  // namespace witbound
