#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace witbound {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Numeric gates used throughout the library. Entrywise checks are absolute.
namespace tol {
inline constexpr double hermiticity = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double state_norm = 1e-10;
inline constexpr double psd_slack = 1e-9;    // eigenvalues >= -psd_slack pass
inline constexpr double purity_gate = 1e-9;  // tr(rho^2) > 1 - purity_gate counts as pure
inline constexpr double rank_rel = 1e-10;    // singular values above rank_rel * sigma_max count
inline constexpr double zero_abs = 1e-12;    // absolute all-zero test
inline constexpr double verdict = 1e-9;      // entangled verdict requires best > verdict
}  // namespace tol

/// Normalized pure state on C^d1 (x) C^d2. Amplitudes are row-major:
/// amp[i*d2 + k] multiplies |i>|k>.
struct StateVector {
  int d1 = 0;
  int d2 = 0;
  ComplexVector amp;
};

/// Density operator on C^d1 (x) C^d2 in the same row-major product basis.
/// Hermitian with unit trace; eigenvalues may dip to -1e-9 from roundoff.
struct DensityMatrix {
  int d1 = 0;
  int d2 = 0;
  ComplexMatrix rho;
};

/// Validating constructors. Throw std::invalid_argument naming the violated
/// invariant (dimensions, finiteness, normalization, hermiticity, trace,
/// positivity).
StateVector make_state(int d1, int d2, ComplexVector amp);
DensityMatrix make_density(int d1, int d2, ComplexMatrix rho);

DensityMatrix projector(const StateVector& psi);
double purity(const DensityMatrix& rho);

}  // namespace witbound
