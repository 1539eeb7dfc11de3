#pragma once

#include <optional>

#include "witbound/types.hpp"
#include "witbound/witness.hpp"

namespace witbound {

/// Closed-form certified lower bounds on the witness-based entanglement
/// measure, evaluated on one state. Raw (unclamped) values are kept; `best`
/// is the largest applicable raw value and the verdict compares it against
/// the 1e-9 gate.
struct BoundReport {
  int d1 = 0;
  int d2 = 0;
  double purity = 0.0;
  std::optional<double> bound_pure;   // pure states only
  double bound_mixed = 0.0;           // any state
  std::optional<double> bound_qubit;  // 2x2 only
  double best = 0.0;
  bool entangled = false;
};

/// Pure-state bound ((sum_i sqrt(mu_i))^2 - 1) / min(d1, d2) from the Schmidt
/// coefficients mu of psi. Zero exactly on product states.
double bound_pure(const StateVector& psi);

/// Correlation-matrix bound 2 (||R_rho||_tr - k) / (d1^2 d2^2 sqrt(rank R_rho))
/// with k = sqrt(d1(d1-1)/2) sqrt(d2(d2-1)/2) the pure-state local Bloch
/// radius product (k = 1 for qubit pairs). Returns 0 when R_rho vanishes.
/// Separable states give values <= 0: their correlation matrix is a convex
/// combination of outer products s t^T with ||s|| ||t|| <= k, so
/// ||R||_tr <= k.
double bound_mixed(const DensityMatrix& rho);

/// Qubit-pair bound from the singular values m1 >= m2 >= m3 of the 3x3
/// correlation matrix and the sign g of its determinant (g = 0 when the
/// determinant vanishes):
///
///   (1/4) max{ 0, m1 + m2 - g m3 - 1, (m1 + m2 + g m3 - 1)/3 }.
///
/// Throws unless d1 = d2 = 2.
double bound_qubit(const DensityMatrix& rho);

/// Witness realizing bound_pure: the projector onto the maximally entangled
/// state in the Schmidt basis of psi, with alpha = 1/min(d1,d2).
WitnessOperator construct_L_pure(const StateVector& psi);

/// Witness realizing bound_mixed: correlation-only L with
/// R_L = (1/c) U sgn(Sigma) V^T from the SVD R_rho = U Sigma V^T and
/// c = 2 sqrt(rank). Throws when R_rho vanishes (no such witness exists).
WitnessOperator construct_L_mixed(const DensityMatrix& rho);

/// Witness realizing bound_qubit: diagonal correlation vector r picked from
/// {(0,0,0), (1,1,-1), (1/3,1/3,1/3)} to maximize r . (m1 - 1, m2, g m3),
/// rotated back through the proper-rotation alignment of R_rho. 2x2 only.
WitnessOperator construct_L_qubit(const DensityMatrix& rho);

/// Runs every applicable bound on rho and assembles the report. The pure
/// bound applies when tr(rho^2) > 1 - 1e-9, evaluated on the dominant
/// eigenvector.
BoundReport evaluate(const DensityMatrix& rho);

}  // namespace witbound
