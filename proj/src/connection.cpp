#include "randers/connection.hpp"

#include <cmath>

#include "randers/error.hpp"

namespace randers {

namespace {

void require_nonzero_beta(const PointState& ps, const char* what) {
  if (!(ps.K2 > 0.0))
    throw NumericalError(std::string(what) + " undefined for K = 0 (Riemannian case)");
}

}  // namespace

SquareMatrix dbeta_matrix(const PointState& ps) {
  const int n = ps.n();
  SquareMatrix db(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) db(i, j) = ps.nabla_beta(i, j) - ps.nabla_beta(j, i);
  return db;
}

Tensor12 difference_tensor(const PointState& ps) {
  const int n = ps.n();
  Tensor12 a(n, Basis::kChart);
  if (!(ps.K2 > 0.0)) return a;  // K = 0: identically zero difference tensor
  const double inv_k2 = 1.0 / ps.K2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        a.at(i, j, k) =
            inv_k2 * (ps.nabla_beta(i, j) * ps.beta_sharp[static_cast<size_t>(k)] -
                      ps.beta[static_cast<size_t>(j)] * ps.nabla_beta_up(i, k));
  return a;
}

Tensor12 nabla_circ_coeffs(const PointState& ps) {
  Tensor12 coeffs = difference_tensor(ps);
  const int n = ps.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) coeffs.at(i, j, k) += ps.gamma(k, i, j);
  return coeffs;
}

Tensor12 torsion_circ(const PointState& ps) {
  const Tensor12 a = difference_tensor(ps);
  const int n = ps.n();
  Tensor12 t(n, Basis::kChart);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t.at(i, j, k) = a.at(i, j, k) - a.at(j, i, k);
  return t;
}

Tensor12 omega(const PointState& ps) {
  require_nonzero_beta(ps, "omega");
  const int n = ps.n();
  const SquareMatrix db = dbeta_matrix(ps);
  const double inv_2k2 = 0.5 / ps.K2;
  const double inv_2k4 = 0.5 / (ps.K2 * ps.K2);

  // w_j = dbeta(d_j, beta#)
  Vec w(static_cast<size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int l = 0; l < n; ++l) s += db(j, l) * ps.beta_sharp[static_cast<size_t>(l)];
    w[static_cast<size_t>(j)] = s;
  }

  // lowered components alpha(Omega(d_i, d_j), d_k), then raise the last slot
  Tensor12 out(n, Basis::kChart);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double bi = ps.beta[static_cast<size_t>(i)];
      const double bj = ps.beta[static_cast<size_t>(j)];
      const double mix = inv_2k4 * (bi * w[static_cast<size_t>(j)] -
                                    bj * w[static_cast<size_t>(i)]);
      for (int k = 0; k < n; ++k) {
        const double lowered = inv_2k2 * (bj * db(i, k) - bi * db(j, k)) +
                               mix * ps.beta[static_cast<size_t>(k)];
        for (int m = 0; m < n; ++m) out.at(i, j, m) += ps.ginv(m, k) * lowered;
      }
    }
  return out;
}

Tensor12 extremal_torsion(const PointState& ps) {
  require_nonzero_beta(ps, "extremal torsion");
  Tensor12 t = torsion_circ(ps);
  const Tensor12 om = omega(ps);
  for (size_t idx = 0; idx < t.c.size(); ++idx) t.c[idx] += om.c[idx];
  return t;
}

Tensor12 FrameTorsionComponents::to_tensor() const {
  const int n = dim;
  const int m = n - 1;
  Tensor12 t(n, Basis::kFrame);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) t.at(a, b, c) = tc_ab(a, b, c);
      t.at(a, b, m) = tn_ab(a, b);
    }
  for (int a = 0; a < m; ++a) {
    t.at(a, m, m) = tn_an(a);
    t.at(m, a, m) = -tn_an(a);
    for (int c = 0; c < m; ++c) {
      t.at(a, m, c) = tc_an(a, c);
      t.at(m, a, c) = -tc_an(a, c);
    }
  }
  return t;
}

FrameTorsionComponents extremal_torsion_frame(const PointState& ps,
                                              const AdaptedFrame& frame) {
  require_nonzero_beta(ps, "frame torsion components");
  if (!frame.adapted)
    throw NumericalError("frame torsion components need an adapted frame");
  const int n = ps.n();
  const int m = n - 1;
  const double k = std::sqrt(ps.K2);
  const SquareMatrix db = dbeta_matrix(ps);

  // N(u, v) = alpha(nabla*_u beta#, v), bilinear in both slots
  auto nbl = [&](const Vec& u, const Vec& v) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        s += u[static_cast<size_t>(i)] * ps.nabla_beta(i, j) * v[static_cast<size_t>(j)];
    return s;
  };

  // nabla*_{beta#} beta#
  Vec acc(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int kk = 0; kk < n; ++kk)
      acc[static_cast<size_t>(kk)] +=
          ps.beta_sharp[static_cast<size_t>(i)] * ps.nabla_beta_up(i, kk);

  FrameTorsionComponents out;
  out.dim = n;
  out.c_ab.assign(static_cast<size_t>(m) * m * m, 0.0);
  out.n_ab.assign(static_cast<size_t>(m) * m, 0.0);
  out.n_an.assign(static_cast<size_t>(m), 0.0);
  out.c_an.assign(static_cast<size_t>(m) * m, 0.0);

  for (int a = 0; a < m; ++a) {
    const Vec& ea = frame.e[static_cast<size_t>(a)];
    for (int b = 0; b < m; ++b) {
      const Vec& eb = frame.e[static_cast<size_t>(b)];
      // alpha(T(e_a, e_b), beta#) = dbeta(e_a, e_b); divide by K for the e_n slot
      double dab = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          dab += ea[static_cast<size_t>(i)] * db(i, j) * eb[static_cast<size_t>(j)];
      out.n_ab[static_cast<size_t>(a) * m + b] = dab / k;
    }
    // alpha(T(e_a, beta#), beta#) = -alpha(nabla*_{beta#} beta#, e_a); / K^2
    out.n_an[static_cast<size_t>(a)] = -ps.alpha(acc, ea) / ps.K2;
    // alpha(T(e_a, beta#), e_c) = -(N(e_a, e_c) + N(e_c, e_a))/2 ; / K
    for (int c = 0; c < m; ++c) {
      const Vec& ec = frame.e[static_cast<size_t>(c)];
      out.c_an[static_cast<size_t>(a) * m + c] =
          -0.5 * (nbl(ea, ec) + nbl(ec, ea)) / k;
    }
  }
  return out;
}

Tensor12 recover_B(const PointState& ps) {
  require_nonzero_beta(ps, "recover_B");
  const int n = ps.n();
  const SquareMatrix db = dbeta_matrix(ps);
  const double inv_k2 = 1.0 / ps.K2;

  // projector P^l_j = delta^l_j - beta_j beta#^l / K^2
  SquareMatrix proj(n);
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j)
      proj(l, j) = (l == j ? 1.0 : 0.0) -
                   ps.beta[static_cast<size_t>(j)] *
                       ps.beta_sharp[static_cast<size_t>(l)] * inv_k2;

  // lowered m_jk = -1/2 dbeta((d_j)_perp, (d_k)_perp)
  SquareMatrix mlow(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int l = 0; l < n; ++l)
        for (int r = 0; r < n; ++r) s += proj(l, j) * proj(r, k) * db(l, r);
      mlow(j, k) = -0.5 * s;
    }

  // B^k_ij = beta_i / K^2 * g^km m_jm
  Tensor12 b(n, Basis::kChart);
  for (int i = 0; i < n; ++i) {
    const double ci = ps.beta[static_cast<size_t>(i)] * inv_k2;
    if (ci == 0.0) continue;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int mm = 0; mm < n; ++mm) s += ps.ginv(k, mm) * mlow(j, mm);
        b.at(i, j, k) = ci * s;
      }
  }
  return b;
}

double integrability_defect(const FieldSpec& spec, std::span<const double> p) {
  const FieldEval fe = evaluate_field(spec, p);
  const int n = spec.n();

  const SharpDerivatives sd = sharp_derivatives(fe);
  const Vec& bsharp = sd.beta_sharp;
  const double k2 = sd.k2;
  if (!(k2 > 0.0))
    throw NumericalError("integrability defect undefined for K = 0");

  // Projected coordinate fields E_a^k(q) = delta_a^k - beta_a(q) beta#^k(q) / K^2(q);
  // E[a][k] and dE[j][a][k] = d_j E_a^k
  const double inv_k2 = 1.0 / k2;
  SquareMatrix efield(n);
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k)
      efield(a, k) = (a == k ? 1.0 : 0.0) -
                     fe.beta[static_cast<size_t>(a)] *
                         bsharp[static_cast<size_t>(k)] * inv_k2;

  std::vector<SquareMatrix> de(static_cast<size_t>(n), SquareMatrix(n));
  for (int j = 0; j < n; ++j)
    for (int a = 0; a < n; ++a)
      for (int k = 0; k < n; ++k) {
        const double num =
            fe.dbeta[static_cast<size_t>(j)][static_cast<size_t>(a)] *
                bsharp[static_cast<size_t>(k)] +
            fe.beta[static_cast<size_t>(a)] *
                sd.d_beta_sharp[static_cast<size_t>(j)][static_cast<size_t>(k)];
        de[static_cast<size_t>(j)](a, k) =
            -num * inv_k2 + fe.beta[static_cast<size_t>(a)] *
                                bsharp[static_cast<size_t>(k)] *
                                sd.d_k2[static_cast<size_t>(j)] * inv_k2 * inv_k2;
      }

  double defect = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      // [E_a, E_b]^k = E_a^j d_j E_b^k - E_b^j d_j E_a^k
      Vec bracket(static_cast<size_t>(n), 0.0);
      for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int j = 0; j < n; ++j)
          s += efield(a, j) * de[static_cast<size_t>(j)](b, k) -
               efield(b, j) * de[static_cast<size_t>(j)](a, k);
        bracket[static_cast<size_t>(k)] = s;
      }
      defect = std::max(defect, std::abs(dot(fe.beta, bracket)));
    }
  return defect;
}

}  // namespace randers
