#pragma once

#include "witbound/types.hpp"

namespace witbound {

/// Sum of singular values (Ky Fan / nuclear norm).
double trace_norm(const ComplexMatrix& m);
/// Hilbert-Schmidt norm.
double frobenius_norm(const ComplexMatrix& m);
/// Largest singular value.
double spectral_norm(const ComplexMatrix& m);

/// Transposes the first factor: out[(i,k),(j,l)] = rho[(j,k),(i,l)], where a
/// composite row index is i*d2 + k.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, int d1, int d2);

/// The d1^2 x d2^2 rearrangement out[(i,j),(k,l)] = rho[(i,k),(j,l)] with row
/// index i*d1 + j and column index k*d2 + l.
ComplexMatrix realign(const ComplexMatrix& rho, int d1, int d2);

/// Squared Schmidt coefficients of a pure state, descending; min(d1,d2)
/// entries summing to 1.
RealVector schmidt_coefficients(const StateVector& psi);

/// Number of singular values above rank_rel * sigma_max; zero when the matrix
/// is entrywise below the absolute zero gate.
int effective_rank(const RealMatrix& m);

}  // namespace witbound
