#include "chemolv/matrix.hpp"

#include <cmath>

#include "chemolv/errors.hpp"

namespace chemolv {

SymMatrix::SymMatrix(int order) : n_(order) {
  if (order != 2 && order != 3) {
    throw InvalidArgument("SymMatrix: order must be 2 or 3");
  }
}

std::vector<double> SymMatrix::leading_minors() const {
  const SymMatrix& m = *this;
  std::vector<double> minors;
  minors.push_back(m(0, 0));
  minors.push_back(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
  if (n_ == 3) {
    minors.push_back(m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                     m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                     m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)));
  }
  return minors;
}

Definiteness is_positive_definite(const SymMatrix& m) {
  double scale = 0.0;
  double skew = 0.0;
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) {
      scale = std::max(scale, std::abs(m(i, j)));
      if (j > i) skew = std::max(skew, std::abs(m(i, j) - m(j, i)));
    }
  }
  if (skew > 1e-12 * std::max(scale, 1e-300)) {
    throw NotSymmetric("is_positive_definite: matrix is not symmetric");
  }

  Definiteness d;
  d.minors = m.leading_minors();
  d.positive_definite = true;
  for (double minor : d.minors) {
    if (!(minor > 0.0)) d.positive_definite = false;
  }
  return d;
}

}  // namespace chemolv
