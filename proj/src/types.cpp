#include "witbound/types.hpp"

#include <sstream>
#include <stdexcept>

namespace witbound {

namespace {

void check_dims(int d1, int d2) {
  if (d1 < 2 || d2 < 2) {
    std::ostringstream msg;
    msg << "local dimensions must both be >= 2, got " << d1 << "x" << d2;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

StateVector make_state(int d1, int d2, ComplexVector amp) {
  check_dims(d1, d2);
  if (amp.size() != static_cast<Eigen::Index>(d1) * d2) {
    std::ostringstream msg;
    msg << "StateVector: amplitude count " << amp.size() << " does not match d1*d2 = " << d1 * d2;
    throw std::invalid_argument(msg.str());
  }
  if (!amp.allFinite()) throw std::invalid_argument("StateVector: amplitudes must be finite");
  const double norm = amp.norm();
  if (std::abs(norm - 1.0) > tol::state_norm) {
    std::ostringstream msg;
    msg << "StateVector: norm deviates from 1 by " << std::abs(norm - 1.0);
    throw std::invalid_argument(msg.str());
  }
  return StateVector{d1, d2, std::move(amp)};
}

DensityMatrix make_density(int d1, int d2, ComplexMatrix rho) {
  check_dims(d1, d2);
  const Eigen::Index dim = static_cast<Eigen::Index>(d1) * d2;
  if (rho.rows() != dim || rho.cols() != dim) {
    std::ostringstream msg;
    msg << "DensityMatrix: shape " << rho.rows() << "x" << rho.cols() << " does not match d1*d2 = "
        << dim;
    throw std::invalid_argument(msg.str());
  }
  if (!rho.allFinite()) throw std::invalid_argument("DensityMatrix: entries must be finite");
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol::hermiticity) {
    std::ostringstream msg;
    msg << "DensityMatrix: hermiticity violated, max |rho - rho^dag| = " << herm;
    throw std::invalid_argument(msg.str());
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol::trace) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace deviates from 1 by " << std::abs(tr - Complex(1.0, 0.0));
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol::psd_slack) {
    std::ostringstream msg;
    msg << "DensityMatrix: positivity violated, min eigenvalue = " << min_eig;
    throw std::invalid_argument(msg.str());
  }
  return DensityMatrix{d1, d2, std::move(rho)};
}

DensityMatrix projector(const StateVector& psi) {
  ComplexMatrix rho = psi.amp * psi.amp.adjoint();
  return DensityMatrix{psi.d1, psi.d2, std::move(rho)};
}

double purity(const DensityMatrix& rho) {
  return (rho.rho * rho.rho).trace().real();
}

}  // namespace witbound
