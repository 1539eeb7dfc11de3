#include "witbound/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

#include "witbound/bloch.hpp"
#include "witbound/linalg.hpp"

namespace witbound {

namespace {

double bloch_radius(int d) { return std::sqrt(0.5 * d * (d - 1)); }

// SVD of a 3x3 correlation matrix aligned to proper rotations:
// R = O1 diag(m1, m2, g*m3) O2^T with det(O1) = det(O2) = +1. g is the sign
// of det(R), taken as 0 when R is rank deficient (the aligned third entry is
// zero then and the choice drops out).
struct QubitCorrelation {
  Eigen::Vector3d m;  // singular values, descending
  double g = 0.0;
  Eigen::Matrix3d o1;
  Eigen::Matrix3d o2;
};

QubitCorrelation qubit_correlation(const RealMatrix& r) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  QubitCorrelation out;
  out.m = svd.singularValues();
  Eigen::Matrix3d u = svd.matrixU();
  Eigen::Matrix3d v = svd.matrixV();
  const double du = u.determinant() >= 0.0 ? 1.0 : -1.0;
  const double dv = v.determinant() >= 0.0 ? 1.0 : -1.0;
  u.col(2) *= du;
  v.col(2) *= dv;
  out.o1 = u;
  out.o2 = v;
  if (out.m(0) <= tol::zero_abs || out.m(2) <= tol::rank_rel * out.m(0)) {
    out.g = 0.0;
  } else {
    out.g = du * dv;
  }
  return out;
}

double qubit_bound_from(const QubitCorrelation& qc) {
  const double m1 = qc.m(0), m2 = qc.m(1), m3 = qc.m(2);
  return 0.25 * std::max({0.0, m1 + m2 - qc.g * m3 - 1.0, (m1 + m2 + qc.g * m3 - 1.0) / 3.0});
}

}  // namespace

double bound_pure(const StateVector& psi) {
  const RealVector mu = schmidt_coefficients(psi);
  const double s = mu.array().sqrt().sum();
  return (s * s - 1.0) / std::min(psi.d1, psi.d2);
}

double bound_mixed(const DensityMatrix& rho) {
  const BlochForm form = bloch_decompose(rho.rho, rho.d1, rho.d2);
  const int rank = effective_rank(form.R);
  if (rank == 0) return 0.0;
  const double tn = trace_norm(form.R.cast<Complex>());
  const double k = bloch_radius(rho.d1) * bloch_radius(rho.d2);
  const double dd = static_cast<double>(rho.d1) * rho.d2;
  return 2.0 * (tn - k) / (dd * dd * std::sqrt(static_cast<double>(rank)));
}

double bound_qubit(const DensityMatrix& rho) {
  if (rho.d1 != 2 || rho.d2 != 2) {
    throw std::invalid_argument("bound_qubit: defined for 2x2 systems only");
  }
  const BlochForm form = bloch_decompose(rho.rho, 2, 2);
  return qubit_bound_from(qubit_correlation(form.R));
}

WitnessOperator construct_L_pure(const StateVector& psi) {
  const int d1 = psi.d1, d2 = psi.d2;
  const int d = std::min(d1, d2);
  ComplexMatrix m(d1, d2);
  for (int i = 0; i < d1; ++i)
    for (int k = 0; k < d2; ++k)
      m(i, k) = psi.amp(i * d2 + k);
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);

  // maximally entangled state in the Schmidt basis of psi
  ComplexVector chi = ComplexVector::Zero(static_cast<Eigen::Index>(d1) * d2);
  const double w = 1.0 / std::sqrt(static_cast<double>(d));
  for (int s = 0; s < d; ++s) {
    ComplexVector bs = svd.matrixV().col(s).conjugate();
    chi += w * Eigen::kroneckerProduct(svd.matrixU().col(s).eval(), bs);
  }
  ComplexMatrix L = chi * chi.adjoint();
  return build_witness(L, d1, d2, 1.0 / d);
}

WitnessOperator construct_L_mixed(const DensityMatrix& rho) {
  const BlochForm form = bloch_decompose(rho.rho, rho.d1, rho.d2);
  const int rank = effective_rank(form.R);
  if (rank == 0) {
    throw std::invalid_argument(
        "construct_L_mixed: correlation matrix vanishes, no correlation witness exists");
  }
  Eigen::JacobiSVD<RealMatrix> svd(form.R, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector sigma = svd.singularValues();
  RealVector flags(sigma.size());
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    flags(i) = sigma(i) > tol::rank_rel * sigma(0) ? 1.0 : 0.0;
  }
  const double c = 2.0 * std::sqrt(static_cast<double>(rank));
  BlochForm lform;
  lform.d1 = rho.d1;
  lform.d2 = rho.d2;
  lform.s = RealVector::Zero(rho.d1 * rho.d1 - 1);
  lform.t = RealVector::Zero(rho.d2 * rho.d2 - 1);
  lform.R = (1.0 / c) * svd.matrixU() * flags.asDiagonal() * svd.matrixV().transpose();
  ComplexMatrix L = bloch_compose(lform);
  return build_witness(L, rho.d1, rho.d2, alpha_correlation(L, rho.d1, rho.d2));
}

WitnessOperator construct_L_qubit(const DensityMatrix& rho) {
  if (rho.d1 != 2 || rho.d2 != 2) {
    throw std::invalid_argument("construct_L_qubit: defined for 2x2 systems only");
  }
  const BlochForm form = bloch_decompose(rho.rho, 2, 2);
  const QubitCorrelation qc = qubit_correlation(form.R);
  const Eigen::Vector3d b(qc.m(0) - 1.0, qc.m(1), qc.g * qc.m(2));

  const std::array<Eigen::Vector3d, 3> candidates = {
      Eigen::Vector3d(0.0, 0.0, 0.0),
      Eigen::Vector3d(1.0, 1.0, -1.0),
      Eigen::Vector3d(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0),
  };
  int pick = 0;
  double best = candidates[0].dot(b);
  for (int i = 1; i < 3; ++i) {
    const double v = candidates[i].dot(b);
    if (v > best) {
      best = v;
      pick = i;
    }
  }
  const Eigen::Vector3d r = candidates[static_cast<std::size_t>(pick)];

  BlochForm lform;
  lform.d1 = 2;
  lform.d2 = 2;
  lform.s = RealVector::Zero(3);
  lform.t = RealVector::Zero(3);
  lform.R = qc.o1 * r.asDiagonal() * qc.o2.transpose();
  ComplexMatrix L = bloch_compose(lform);
  const double alpha = 0.25 * (1.0 + r.cwiseAbs().maxCoeff());
  return build_witness(L, 2, 2, alpha);
}

BoundReport evaluate(const DensityMatrix& rho) {
  BoundReport report;
  report.d1 = rho.d1;
  report.d2 = rho.d2;
  report.purity = purity(rho);
  report.bound_mixed = bound_mixed(rho);
  report.best = report.bound_mixed;

  if (report.purity > 1.0 - tol::purity_gate) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.rho);
    ComplexVector dominant = es.eigenvectors().col(es.eigenvectors().cols() - 1);
    dominant /= dominant.norm();
    const StateVector psi = make_state(rho.d1, rho.d2, std::move(dominant));
    report.bound_pure = bound_pure(psi);
    report.best = std::max(report.best, *report.bound_pure);
  }
  if (rho.d1 == 2 && rho.d2 == 2) {
    report.bound_qubit = bound_qubit(rho);
    report.best = std::max(report.best, *report.bound_qubit);
  }
  report.entangled = report.best > tol::verdict;
  return report;
}

}  // namespace witbound
