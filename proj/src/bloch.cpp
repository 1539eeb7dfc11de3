#include "witbound/bloch.hpp"

#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

#include "witbound/gell_mann.hpp"

namespace witbound {

namespace {

// tr(a * b) without forming the product
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.transpose().cwiseProduct(b).sum();
}

}  // namespace

BlochForm bloch_decompose(const ComplexMatrix& op, int d1, int d2) {
  const Eigen::Index dim = static_cast<Eigen::Index>(d1) * d2;
  if (op.rows() != dim || op.cols() != dim) {
    throw std::invalid_argument("bloch_decompose: operator shape does not match d1*d2");
  }
  const double herm = (op - op.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol::hermiticity) {
    std::ostringstream msg;
    msg << "bloch_decompose: operator not Hermitian, max |M - M^dag| = " << herm;
    throw std::invalid_argument(msg.str());
  }
  if (std::abs(op.trace() - Complex(1.0, 0.0)) > tol::trace) {
    std::ostringstream msg;
    msg << "bloch_decompose: trace deviates from 1 by " << std::abs(op.trace() - Complex(1.0, 0.0));
    throw std::invalid_argument(msg.str());
  }

  const GellMannBasis a = gell_mann_basis(d1);
  const GellMannBasis b = gell_mann_basis(d2);
  const int n1 = d1 * d1 - 1;
  const int n2 = d2 * d2 - 1;
  const ComplexMatrix eye1 = ComplexMatrix::Identity(d1, d1);
  const ComplexMatrix eye2 = ComplexMatrix::Identity(d2, d2);

  BlochForm form;
  form.d1 = d1;
  form.d2 = d2;
  form.s.resize(n1);
  form.t.resize(n2);
  form.R.resize(n1, n2);

  for (int i = 0; i < n1; ++i) {
    form.s(i) = 0.5 * d1 * trace_product(op, Eigen::kroneckerProduct(a.lambda[i], eye2)).real();
  }
  for (int j = 0; j < n2; ++j) {
    form.t(j) = 0.5 * d2 * trace_product(op, Eigen::kroneckerProduct(eye1, b.lambda[j])).real();
  }
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      form.R(i, j) =
          0.25 * d1 * d2 * trace_product(op, Eigen::kroneckerProduct(a.lambda[i], b.lambda[j])).real();
    }
  }
  return form;
}

ComplexMatrix bloch_compose(const BlochForm& form) {
  const int d1 = form.d1;
  const int d2 = form.d2;
  const int n1 = d1 * d1 - 1;
  const int n2 = d2 * d2 - 1;
  if (form.s.size() != n1 || form.t.size() != n2 || form.R.rows() != n1 || form.R.cols() != n2) {
    throw std::invalid_argument("bloch_compose: coefficient shapes do not match d1, d2");
  }
  const GellMannBasis a = gell_mann_basis(d1);
  const GellMannBasis b = gell_mann_basis(d2);
  const ComplexMatrix eye1 = ComplexMatrix::Identity(d1, d1);
  const ComplexMatrix eye2 = ComplexMatrix::Identity(d2, d2);
  const Eigen::Index dim = static_cast<Eigen::Index>(d1) * d2;

  ComplexMatrix m = ComplexMatrix::Identity(dim, dim);
  for (int i = 0; i < n1; ++i) {
    m += form.s(i) * Eigen::kroneckerProduct(a.lambda[i], eye2);
  }
  for (int j = 0; j < n2; ++j) {
    m += form.t(j) * Eigen::kroneckerProduct(eye1, b.lambda[j]);
  }
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      m += form.R(i, j) * Eigen::kroneckerProduct(a.lambda[i], b.lambda[j]);
    }
  }
  return m / static_cast<double>(d1 * d2);
}

}  // namespace witbound
