#include "witbound/linalg.hpp"

#include <stdexcept>

namespace witbound {

namespace {

void check_shape(const ComplexMatrix& rho, int d1, int d2, const char* who) {
  const Eigen::Index dim = static_cast<Eigen::Index>(d1) * d2;
  if (d1 < 2 || d2 < 2 || rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument(std::string(who) + ": matrix shape does not match d1*d2");
  }
}

}  // namespace

double trace_norm(const ComplexMatrix& m) {
  return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues().sum();
}

double frobenius_norm(const ComplexMatrix& m) { return m.norm(); }

double spectral_norm(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues()(0);
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, int d1, int d2) {
  check_shape(rho, d1, d2, "partial_transpose");
  ComplexMatrix out(rho.rows(), rho.cols());
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j)
      for (int k = 0; k < d2; ++k)
        for (int l = 0; l < d2; ++l)
          out(i * d2 + k, j * d2 + l) = rho(j * d2 + k, i * d2 + l);
  return out;
}

ComplexMatrix realign(const ComplexMatrix& rho, int d1, int d2) {
  check_shape(rho, d1, d2, "realign");
  ComplexMatrix out(static_cast<Eigen::Index>(d1) * d1, static_cast<Eigen::Index>(d2) * d2);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j)
      for (int k = 0; k < d2; ++k)
        for (int l = 0; l < d2; ++l)
          out(i * d1 + j, k * d2 + l) = rho(i * d2 + k, j * d2 + l);
  return out;
}

RealVector schmidt_coefficients(const StateVector& psi) {
  ComplexMatrix m(psi.d1, psi.d2);
  for (int i = 0; i < psi.d1; ++i)
    for (int k = 0; k < psi.d2; ++k)
      m(i, k) = psi.amp(i * psi.d2 + k);
  RealVector sigma = Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
  return sigma.array().square();  // Eigen returns singular values descending
}

int effective_rank(const RealMatrix& m) {
  if (m.size() == 0 || m.cwiseAbs().maxCoeff() <= tol::zero_abs) return 0;
  RealVector sigma = Eigen::JacobiSVD<RealMatrix>(m).singularValues();
  const double cutoff = tol::rank_rel * sigma(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff) ++rank;
  return rank;
}

}  // namespace witbound
