#include "randers/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "randers/error.hpp"

namespace randers {

namespace {

// alpha(nabla*_u beta#, v) from the PointState tables
double nabla_pairing(const PointState& ps, const Vec& u, const Vec& v) {
  double s = 0.0;
  for (int i = 0; i < ps.n(); ++i)
    for (int j = 0; j < ps.n(); ++j)
      s += u[static_cast<size_t>(i)] * ps.nabla_beta(i, j) * v[static_cast<size_t>(j)];
  return s;
}

// Minimum-norm solution of C u ~= d with rank tolerance relative to the
// largest singular value. Returns the residual norm alongside u.
std::pair<Eigen::VectorXd, double> least_norm_solve(const Eigen::MatrixXd& c,
                                                    const Eigen::VectorXd& d) {
  if (c.cols() == 0) {
    return {Eigen::VectorXd::Zero(0), d.norm()};
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(c, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-10);
  Eigen::VectorXd u = svd.solve(d);
  const double residual = (c * u - d).norm();
  return {u, residual};
}

}  // namespace

MinNormAResult min_norm_A(const PointState& ps, std::span<const double> x,
                          double feas_tol) {
  const int n = ps.n();
  MinNormAResult out;
  out.frame = ps.K2 > 0.0 ? adapted_frame(ps) : orthonormal_frame(ps);

  Vec xv(x.begin(), x.end());

  // beta# coefficients in the frame and the constraint right-hand side
  // d_k = -alpha(nabla*_X beta#, e_k).
  Vec csharp(static_cast<size_t>(n), 0.0);
  Vec rhs(static_cast<size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    csharp[static_cast<size_t>(k)] = ps.alpha(ps.beta_sharp, out.frame.e[static_cast<size_t>(k)]);
    rhs[static_cast<size_t>(k)] = -nabla_pairing(ps, xv, out.frame.e[static_cast<size_t>(k)]);
  }

  // unknowns: strict upper triangle u_(j,k), j < k, with a_jk = u, a_kj = -u
  const int unknowns = n * (n - 1) / 2;
  auto flat = [n](int j, int k) {  // j < k
    return j * n - j * (j + 1) / 2 + (k - j - 1);
  };

  // constraint row k: sum_j csharp_j a_jk = d_k
  Eigen::MatrixXd cmat = Eigen::MatrixXd::Zero(n, unknowns);
  Eigen::VectorXd dvec(n);
  for (int k = 0; k < n; ++k) {
    dvec(k) = rhs[static_cast<size_t>(k)];
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      const int col = j < k ? flat(j, k) : flat(k, j);
      const double sign = j < k ? 1.0 : -1.0;
      cmat(k, col) += sign * csharp[static_cast<size_t>(j)];
    }
  }

  auto [u, residual] = least_norm_solve(cmat, dvec);

  out.qp.minimizer.assign(u.data(), u.data() + u.size());
  out.qp.residual = residual;
  out.qp.feasible = residual <= feas_tol;
  out.qp.objective = 2.0 * u.squaredNorm();  // |iota_X A|^2 = sum over jk of a_jk^2

  out.a_frame = SquareMatrix(n);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      const double v = u(flat(j, k));
      out.a_frame(j, k) = v;
      out.a_frame(k, j) = -v;
    }
  return out;
}

MinNormTResult min_norm_T(const PointState& ps) {
  if (!(ps.K2 > 0.0))
    throw NumericalError("min_norm_T undefined for K = 0 (Riemannian case)");
  const int n = ps.n();
  const int m = n - 1;
  const double k = std::sqrt(ps.K2);

  MinNormTResult out;
  out.frame = adapted_frame(ps);

  // Base torsion in frame components from the displayed four-term formula:
  // alpha(T°(e_i, e_j), e_k) =
  //   [N(e_i,e_j) c_k - c_j N(e_i,e_k) - N(e_j,e_i) c_i... ] / K^2
  // with c_k = alpha(beta#, e_k) = K delta_{k,n} in the adapted frame.
  Eigen::MatrixXd nmat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      nmat(i, j) = nabla_pairing(ps, out.frame.e[static_cast<size_t>(i)],
                                 out.frame.e[static_cast<size_t>(j)]);

  out.base_torsion = Tensor12(n, Basis::kFrame);
  const double inv_k2 = 1.0 / ps.K2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int kk = 0; kk < n; ++kk) {
        const double ci = i == n - 1 ? k : 0.0;
        const double cj = j == n - 1 ? k : 0.0;
        const double ck = kk == n - 1 ? k : 0.0;
        out.base_torsion.at(i, j, kk) =
            inv_k2 * (nmat(i, j) * ck - cj * nmat(i, kk) -
                      nmat(j, i) * ck + ci * nmat(j, kk));
      }

  // Unknowns: b_ijk with j < k <= m-1 (frame indices below the beta# slot);
  // skewness in (j,k) and B(., e_n) = 0 are built into the parametrization.
  const int per_dir = m * (m - 1) / 2;
  const int unknowns = n * per_dir;
  auto flat_jk = [m](int j, int kk) {  // j < kk, both < m
    return j * m - j * (j + 1) / 2 + (kk - j - 1);
  };
  // signed b_ijk lookup into the unknown vector; -1 when structurally zero
  auto lookup = [&](int i, int j, int kk, double& sign) -> int {
    if (j >= m || kk >= m || j == kk) return -1;
    if (j < kk) {
      sign = 1.0;
      return i * per_dir + flat_jk(j, kk);
    }
    sign = -1.0;
    return i * per_dir + flat_jk(kk, j);
  };

  // torsion(b) = base + antisym(b); rows over all n^3 components
  Eigen::MatrixXd mmat = Eigen::MatrixXd::Zero(n * n * n, unknowns);
  Eigen::VectorXd t0(n * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int kk = 0; kk < n; ++kk) {
        const int row = (i * n + j) * n + kk;
        t0(row) = out.base_torsion.at(i, j, kk);
        double sign = 0.0;
        int col = lookup(i, j, kk, sign);
        if (col >= 0) mmat(row, col) += sign;
        col = lookup(j, i, kk, sign);
        if (col >= 0) mmat(row, col) -= sign;
      }

  auto [u, residual] = least_norm_solve(mmat, -t0);
  (void)residual;  // the least-squares residual IS the optimal torsion norm

  out.qp.minimizer.assign(u.data(), u.data() + u.size());
  out.qp.feasible = true;  // B = 0 is always feasible; constraints are structural
  out.qp.residual = 0.0;

  out.optimal_B = Tensor12(n, Basis::kFrame);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int kk = 0; kk < n; ++kk) {
        double sign = 0.0;
        const int col = lookup(i, j, kk, sign);
        if (col >= 0) out.optimal_B.at(i, j, kk) = sign * u(col);
      }

  out.optimal_torsion = Tensor12(n, Basis::kFrame);
  double obj = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int kk = 0; kk < n; ++kk) {
        const double v = out.base_torsion.at(i, j, kk) +
                         out.optimal_B.at(i, j, kk) - out.optimal_B.at(j, i, kk);
        out.optimal_torsion.at(i, j, kk) = v;
        obj += v * v;
      }
  out.qp.objective = obj;
  return out;
}

}  // namespace randers
