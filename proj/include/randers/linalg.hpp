#pragma once

// Dense helpers for the small (n <= 6) matrices this toolkit works with.

#include <cstddef>
#include <span>
#include <vector>

namespace randers {

using Vec = std::vector<double>;

class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}

  int n() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  static SquareMatrix identity(int n);

  Vec operator*(std::span<const double> v) const;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

/// In-place lower Cholesky factor of an SPD matrix; false if not SPD.
bool cholesky(const SquareMatrix& a, SquareMatrix& lower);

/// Inverse of an SPD matrix through its Cholesky factor. The result is
/// symmetrized exactly. Returns false if the matrix is not SPD.
bool spd_inverse(const SquareMatrix& a, SquareMatrix& inv);

double dot(std::span<const double> u, std::span<const double> v);

/// u^T a v
double bilinear(const SquareMatrix& a, std::span<const double> u,
                std::span<const double> v);

Vec axpy(double s, std::span<const double> x, std::span<const double> y);  // s*x + y
Vec scaled(double s, std::span<const double> x);

}  // namespace randers
