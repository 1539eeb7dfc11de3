#pragma once

#include <cstdint>
#include <utility>

#include "witbound/types.hpp"

namespace witbound {

/// (a, 0, 0, 1/sqrt(2)) / sqrt(a^2 + 1/2) on 2x2. Requires a >= 0 and finite.
StateVector pure_family_2x2(double a);

/// (a, 0, 0, 0, 1/sqrt(3), 0, 0, 0, 1/sqrt(3)) / sqrt(a^2 + 2/3) on 3x3.
StateVector pure_family_3x3(double a);

/// (x / (d1 d2)) I + (1 - x) |psi><psi| for x in [0, 1].
DensityMatrix isotropic_mix(double x, const StateVector& psi);

/// Haar-random product pure state |a> (x) |b>.
StateVector random_product_pure(int d1, int d2, std::uint64_t seed);

/// Convex mixture of k Haar-random product pure states with Dirichlet(1,..,1)
/// weights; separable by construction.
DensityMatrix random_separable_mixed(int d1, int d2, int k, std::uint64_t seed);

/// Haar-random pure state on the full d1*d2 space.
StateVector random_pure(int d1, int d2, std::uint64_t seed);

/// Full-rank random density operator: G G^dag / tr(G G^dag) with G a complex
/// Gaussian (Ginibre) matrix.
DensityMatrix random_density(int d1, int d2, std::uint64_t seed);

/// Haar-random local unitaries (U_A, U_B), phase-fixed QR of Ginibre matrices.
std::pair<ComplexMatrix, ComplexMatrix> random_local_unitary_pair(int d1, int d2,
                                                                  std::uint64_t seed);

/// (U_A (x) U_B) rho (U_A (x) U_B)^dag.
DensityMatrix conjugate_local(const DensityMatrix& rho, const ComplexMatrix& ua,
                              const ComplexMatrix& ub);

}  // namespace witbound
