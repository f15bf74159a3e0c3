#include "randers/linalg.hpp"

#include <cmath>

namespace randers {

SquareMatrix SquareMatrix::identity(int n) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vec SquareMatrix::operator*(std::span<const double> v) const {
  Vec r(static_cast<size_t>(n_), 0.0);
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j) * v[static_cast<size_t>(j)];
    r[static_cast<size_t>(i)] = s;
  }
  return r;
}

bool cholesky(const SquareMatrix& a, SquareMatrix& lower) {
  const int n = a.n();
  lower = SquareMatrix(n);
  for (int j = 0; j < n; ++j) {
    double d = a(j, j);
    for (int k = 0; k < j; ++k) d -= lower(j, k) * lower(j, k);
    if (!(d > 0.0) || !std::isfinite(d)) return false;
    const double ljj = std::sqrt(d);
    lower(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (int k = 0; k < j; ++k) s -= lower(i, k) * lower(j, k);
      lower(i, j) = s / ljj;
    }
  }
  return true;
}

bool spd_inverse(const SquareMatrix& a, SquareMatrix& inv) {
  const int n = a.n();
  SquareMatrix l;
  if (!cholesky(a, l)) return false;

  // linv by forward substitution on the identity
  SquareMatrix linv(n);
  for (int c = 0; c < n; ++c) {
    for (int i = c; i < n; ++i) {
      double s = (i == c) ? 1.0 : 0.0;
      for (int k = c; k < i; ++k) s -= l(i, k) * linv(k, c);
      linv(i, c) = s / l(i, i);
    }
  }

  // a^-1 = linv^T linv, symmetric by construction
  inv = SquareMatrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = std::max(i, j); k < n; ++k) s += linv(k, i) * linv(k, j);
      inv(i, j) = s;
      inv(j, i) = s;
    }
  return true;
}

double dot(std::span<const double> u, std::span<const double> v) {
  double s = 0.0;
  for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

double bilinear(const SquareMatrix& a, std::span<const double> u,
                std::span<const double> v) {
  double s = 0.0;
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j)
      s += u[static_cast<size_t>(i)] * a(i, j) * v[static_cast<size_t>(j)];
  return s;
}

Vec axpy(double s, std::span<const double> x, std::span<const double> y) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = s * x[i] + y[i];
  return r;
}

Vec scaled(double s, std::span<const double> x) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = s * x[i];
  return r;
}

}  // namespace randers
