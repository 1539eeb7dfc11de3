#pragma once

#include <vector>

#include "witbound/types.hpp"

namespace witbound {

/// Generator set spanning traceless Hermitian d x d matrices, normalized so
/// tr(lambda_i lambda_j) = 2 delta_ij. Order: symmetric pair matrices, then
/// antisymmetric pair matrices, then diagonal matrices; pair indices (j,k),
/// j < k, run lexicographically within each group. For d = 2 this yields
/// exactly {sigma_x, sigma_y, sigma_z}.
struct GellMannBasis {
  int d = 0;
  std::vector<ComplexMatrix> lambda;  // d*d - 1 matrices
};

GellMannBasis gell_mann_basis(int d);

}  // namespace witbound
