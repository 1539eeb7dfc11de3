#include "witbound/gell_mann.hpp"

#include <cmath>
#include <stdexcept>

namespace witbound {

GellMannBasis gell_mann_basis(int d) {
  if (d < 2) throw std::invalid_argument("gell_mann_basis: d must be >= 2");
  GellMannBasis basis;
  basis.d = d;
  basis.lambda.reserve(static_cast<std::size_t>(d) * d - 1);

  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, k) = 1.0;
      m(k, j) = 1.0;
      basis.lambda.push_back(std::move(m));
    }
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, k) = Complex(0.0, -1.0);
      m(k, j) = Complex(0.0, 1.0);
      basis.lambda.push_back(std::move(m));
    }
  }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (int j = 0; j < l; ++j) m(j, j) = scale;
    m(l, l) = -scale * l;
    basis.lambda.push_back(std::move(m));
  }
  return basis;
}

}  // namespace witbound
