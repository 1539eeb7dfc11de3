#pragma once

#include "witbound/types.hpp"

namespace witbound {

/// Coefficients of a Hermitian unit-trace operator M on C^d1 (x) C^d2 in the
/// product generator basis:
///
///   M = (1/(d1 d2)) ( I (x) I + sum_i s_i lambda_i (x) I
///                             + sum_j t_j I (x) lambda_j
///                             + sum_ij R_ij lambda_i (x) lambda_j )
///
/// s has d1^2-1 entries, t has d2^2-1, R is (d1^2-1) x (d2^2-1). All real.
struct BlochForm {
  int d1 = 0;
  int d2 = 0;
  RealVector s;
  RealVector t;
  RealMatrix R;
};

/// Extracts s_i = (d1/2) tr(M lambda_i (x) I), t_j = (d2/2) tr(M I (x) lambda_j),
/// R_ij = (d1 d2 / 4) tr(M lambda_i (x) lambda_j). The operator must be
/// Hermitian with unit trace (within tolerance) or std::invalid_argument is
/// thrown.
BlochForm bloch_decompose(const ComplexMatrix& op, int d1, int d2);

/// Inverse of bloch_decompose; always returns a Hermitian unit-trace matrix.
ComplexMatrix bloch_compose(const BlochForm& form);

}  // namespace witbound
