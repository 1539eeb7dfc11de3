#pragma once

#include <string>

#include "witbound/types.hpp"

namespace witbound {

/// Reads a density matrix from a JSON file of the form
///   {"d1": 2, "d2": 2, "matrix": [[re, im], [re, im], ...]}
/// where "matrix" lists the (d1*d2)^2 entries in row-major order. Throws
/// std::runtime_error naming the offending field on malformed input, and
/// std::invalid_argument if the matrix fails the density-operator checks
/// (hermiticity, unit trace, positivity).
DensityMatrix load_state_file(const std::string& path);

/// Writes a density matrix in the format load_state_file reads back.
void save_state_file(const std::string& path, const DensityMatrix& rho);

}  // namespace witbound
