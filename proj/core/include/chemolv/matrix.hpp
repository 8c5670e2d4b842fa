#pragma once

#include <array>
#include <vector>

namespace chemolv {

// Dense symmetric matrix of order 2 or 3, stored row-major.
class SymMatrix {
 public:
  explicit SymMatrix(int order);

  int order() const { return n_; }

  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  // Leading principal minors M1, ..., Mn by direct expansion.
  std::vector<double> leading_minors() const;

  bool operator==(const SymMatrix&) const = default;

 private:
  int n_;
  std::array<double, 9> a_{};
};

struct Definiteness {
  bool positive_definite = false;
  std::vector<double> minors;  // leading principal minors, in order
};

// Sylvester criterion: positive definite iff every leading principal minor is
// strictly positive.  Requires symmetry within 1e-12 relative to the largest
// entry magnitude; throws NotSymmetric otherwise.
Definiteness is_positive_definite(const SymMatrix& m);

}  // namespace chemolv
