#include "randers/geometry.hpp"

#include <cmath>
#include <sstream>

#include "randers/error.hpp"

namespace randers {

namespace {

std::string point_to_string(std::span<const double> p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  os << ")";
  return os.str();
}

}  // namespace

bool DomainBox::contains(std::span<const double> p, double slack) const {
  if (p.size() != min.size()) return false;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] < min[i] - slack || p[i] > max[i] + slack) return false;
  return true;
}

FieldSpec::FieldSpec(int dimension, std::vector<Expression> metric_upper,
                     std::vector<Expression> beta, DomainBox domain)
    : n_(dimension),
      metric_upper_(std::move(metric_upper)),
      beta_(std::move(beta)),
      domain_(std::move(domain)) {
  if (n_ < 2) throw ConfigError("dimension must be at least 2");
  const size_t expect = static_cast<size_t>(n_) * (n_ + 1) / 2;
  if (metric_upper_.size() != expect)
    throw ConfigError("metric needs " + std::to_string(expect) +
                      " upper-triangle entries, got " + std::to_string(metric_upper_.size()));
  if (beta_.size() != static_cast<size_t>(n_))
    throw ConfigError("beta needs " + std::to_string(n_) + " components, got " +
                      std::to_string(beta_.size()));
  if (domain_.min.size() != static_cast<size_t>(n_) ||
      domain_.max.size() != static_cast<size_t>(n_))
    throw ConfigError("domain box dimension does not match field dimension");
  for (int i = 0; i < n_; ++i)
    if (!(domain_.min[static_cast<size_t>(i)] < domain_.max[static_cast<size_t>(i)]))
      throw ConfigError("domain box is empty in coordinate " + std::to_string(i + 1));
}

FieldSpec FieldSpec::from_strings(int dimension,
                                  const std::vector<std::vector<std::string>>& metric_rows,
                                  const std::vector<std::string>& beta,
                                  const DomainBox& domain) {
  if (static_cast<int>(metric_rows.size()) != dimension)
    throw ConfigError("metric must have " + std::to_string(dimension) + " rows");
  std::vector<Expression> upper;
  for (int i = 0; i < dimension; ++i) {
    if (static_cast<int>(metric_rows[static_cast<size_t>(i)].size()) != dimension)
      throw ConfigError("metric row " + std::to_string(i + 1) + " must have " +
                        std::to_string(dimension) + " entries");
    for (int j = i; j < dimension; ++j)
      upper.push_back(Expression::parse(
          metric_rows[static_cast<size_t>(i)][static_cast<size_t>(j)], dimension));
  }
  std::vector<Expression> b;
  b.reserve(beta.size());
  for (const auto& s : beta) b.push_back(Expression::parse(s, dimension));
  return FieldSpec(dimension, std::move(upper), std::move(b), domain);
}

const Expression& FieldSpec::metric_entry(int i, int j) const {
  // index into the packed upper triangle, i <= j
  const int idx = i * n_ - i * (i - 1) / 2 + (j - i);
  return metric_upper_[static_cast<size_t>(idx)];
}

FieldEval evaluate_field(const FieldSpec& spec, std::span<const double> p) {
  const int n = spec.n();
  if (static_cast<int>(p.size()) != n)
    throw ConfigError("point dimension does not match field dimension");
  if (!spec.domain().contains(p))
    throw ConfigError("point " + point_to_string(p) + " lies outside the domain box");

  FieldEval fe;
  fe.point.assign(p.begin(), p.end());
  fe.g = SquareMatrix(n);
  fe.dg.assign(static_cast<size_t>(n), SquareMatrix(n));
  fe.beta.assign(static_cast<size_t>(n), 0.0);
  fe.dbeta.assign(static_cast<size_t>(n), Vec(static_cast<size_t>(n), 0.0));

  Vec dir(static_cast<size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    dir[static_cast<size_t>(k)] = 1.0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        auto [v, d] = spec.metric_entry(i, j).eval_dual(p, dir);
        fe.g(i, j) = v;
        fe.g(j, i) = v;
        fe.dg[static_cast<size_t>(k)](i, j) = d;
        fe.dg[static_cast<size_t>(k)](j, i) = d;
      }
    for (int i = 0; i < n; ++i) {
      auto [v, d] = spec.beta_entry(i).eval_dual(p, dir);
      fe.beta[static_cast<size_t>(i)] = v;
      fe.dbeta[static_cast<size_t>(k)][static_cast<size_t>(i)] = d;
    }
    dir[static_cast<size_t>(k)] = 0.0;
  }
  return fe;
}

SharpDerivatives sharp_derivatives(const FieldEval& fe) {
  const int n = fe.g.n();
  SquareMatrix ginv;
  if (!spd_inverse(fe.g, ginv))
    throw NumericalError("metric is not positive definite at " +
                         point_to_string(fe.point));
  SharpDerivatives sd;
  sd.beta_sharp = ginv * fe.beta;
  sd.k2 = dot(fe.beta, sd.beta_sharp);
  sd.d_beta_sharp.resize(static_cast<size_t>(n));
  sd.d_k2.assign(static_cast<size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    const Vec tmp = fe.dg[static_cast<size_t>(j)] * sd.beta_sharp;
    Vec rhs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      rhs[static_cast<size_t>(i)] =
          fe.dbeta[static_cast<size_t>(j)][static_cast<size_t>(i)] -
          tmp[static_cast<size_t>(i)];
    sd.d_beta_sharp[static_cast<size_t>(j)] = ginv * rhs;
    sd.d_k2[static_cast<size_t>(j)] =
        dot(fe.dbeta[static_cast<size_t>(j)], sd.beta_sharp) +
        dot(fe.beta, sd.d_beta_sharp[static_cast<size_t>(j)]);
  }
  return sd;
}

PointState point_state(const FieldSpec& spec, std::span<const double> p) {
  const FieldEval fe = evaluate_field(spec, p);
  const int n = spec.n();

  PointState ps;
  ps.point = fe.point;
  ps.g = fe.g;
  if (!spd_inverse(fe.g, ps.ginv))
    throw NumericalError("metric is not positive definite at " + point_to_string(p));

  // Gamma^k_ij = 1/2 g^kl (d_i g_jl + d_j g_il - d_l g_ij)
  ps.gamma_.assign(static_cast<size_t>(n) * n * n, 0.0);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l)
          s += ps.ginv(k, l) * (fe.dg[static_cast<size_t>(i)](j, l) +
                                fe.dg[static_cast<size_t>(j)](i, l) -
                                fe.dg[static_cast<size_t>(l)](i, j));
        ps.gamma(k, i, j) = 0.5 * s;
        ps.gamma(k, j, i) = 0.5 * s;
      }

  ps.beta = fe.beta;
  ps.beta_sharp = ps.ginv * fe.beta;
  ps.K2 = dot(ps.beta, ps.beta_sharp);

  // Lowered covariant derivative (nabla*_i beta)_j = d_i beta_j - Gamma^l_ij beta_l,
  // raised through g^-1. Both equal alpha(nabla*_{d_i} beta#, .) since nabla* g = 0.
  ps.nabla_beta = SquareMatrix(n);
  ps.nabla_beta_up = SquareMatrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = fe.dbeta[static_cast<size_t>(i)][static_cast<size_t>(j)];
      for (int l = 0; l < n; ++l) s -= ps.gamma(l, i, j) * fe.beta[static_cast<size_t>(l)];
      ps.nabla_beta(i, j) = s;
    }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += ps.ginv(k, j) * ps.nabla_beta(i, j);
      ps.nabla_beta_up(i, k) = s;
    }
  return ps;
}

Projection project(const PointState& ps, std::span<const double> y) {
  if (!(ps.K2 > 0.0))
    throw NumericalError("projection undefined: beta vanishes at this point (K = 0)");
  const double c = ps.beta_of(y) / ps.K2;
  Projection pr;
  pr.along_beta = scaled(c, ps.beta_sharp);
  pr.perp = axpy(-1.0, pr.along_beta, y);
  return pr;
}

namespace {

// Deterministic Gram-Schmidt with one reorthogonalization pass.
std::vector<Vec> gram_schmidt(const PointState& ps, const std::vector<Vec>& input) {
  std::vector<Vec> out;
  for (const Vec& v0 : input) {
    Vec v = v0;
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& u : out) {
        const double c = ps.alpha(u, v);
        v = axpy(-c, u, v);
      }
    const double len2 = ps.alpha(v, v);
    if (len2 <= 1e-24)
      throw NumericalError("degenerate frame construction: dependent basis vector");
    Vec unit = scaled(1.0 / std::sqrt(len2), v);
    out.push_back(std::move(unit));
  }
  return out;
}

}  // namespace

AdaptedFrame adapted_frame(const PointState& ps) {
  if (!(ps.K2 > 0.0))
    throw NumericalError("adapted frame undefined: beta vanishes at this point (K = 0)");
  const int n = ps.n();
  const double k = std::sqrt(ps.K2);

  // Skip the coordinate direction most aligned with beta#:
  // the first index maximizing |alpha(d_i, beta#)| = |beta_i|.
  int skip = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(ps.beta[static_cast<size_t>(i)]) >
        std::abs(ps.beta[static_cast<size_t>(skip)]))
      skip = i;

  std::vector<Vec> input;
  input.push_back(scaled(1.0 / k, ps.beta_sharp));
  for (int i = 0; i < n; ++i) {
    if (i == skip) continue;
    Vec e(static_cast<size_t>(n), 0.0);
    e[static_cast<size_t>(i)] = 1.0;
    input.push_back(std::move(e));
  }

  std::vector<Vec> ortho = gram_schmidt(ps, input);

  AdaptedFrame fr;
  fr.adapted = true;
  fr.e.assign(ortho.begin() + 1, ortho.end());  // e_1..e_{n-1}
  fr.e.push_back(ortho.front());                // e_n = beta#/K
  return fr;
}

AdaptedFrame orthonormal_frame(const PointState& ps) {
  const int n = ps.n();
  std::vector<Vec> input;
  for (int i = 0; i < n; ++i) {
    Vec e(static_cast<size_t>(n), 0.0);
    e[static_cast<size_t>(i)] = 1.0;
    input.push_back(std::move(e));
  }
  AdaptedFrame fr;
  fr.adapted = false;
  fr.e = gram_schmidt(ps, input);
  return fr;
}

double tensor12_norm_sq(const PointState& ps, const Tensor12& t) {
  const int n = t.dim;
  if (n != ps.n()) throw ConfigError("tensor dimension does not match point state");
  if (t.basis == Basis::kFrame) {
    double s = 0.0;
    for (double v : t.c) s += v * v;
    return s;
  }
  // contract one index at a time: cost O(n^4)
  // u^r_ij = g_kr T^k_ij
  Tensor12 low(n, Basis::kChart);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += ps.g(k, r) * t.at(i, j, k);
        low.at(i, j, r) = s;
      }
  // v^k_pj = g^ip T^k_ij ; then w^k_pq = g^jq v^k_pj ; norm = sum low * w
  Tensor12 up1(n, Basis::kChart);
  for (int p = 0; p < n; ++p)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += ps.ginv(i, p) * t.at(i, j, k);
        up1.at(p, j, k) = s;
      }
  double norm = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += ps.ginv(j, q) * up1.at(p, j, k);
        norm += s * low.at(p, q, k);
      }
  return norm;
}

Tensor12 to_frame(const PointState& ps, const Tensor12& t, const AdaptedFrame& frame) {
  const int n = t.dim;
  if (t.basis != Basis::kChart) throw ConfigError("to_frame expects a chart-basis tensor");
  Tensor12 out(n, Basis::kFrame);
  // lowered output slot: alpha(T(e_a, e_b), e_c)
  std::vector<Vec> ge(frame.e.size());
  for (size_t c = 0; c < frame.e.size(); ++c) ge[c] = ps.g * frame.e[c];
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            double tij = 0.0;
            for (int k = 0; k < n; ++k)
              tij += t.at(i, j, k) * ge[static_cast<size_t>(c)][static_cast<size_t>(k)];
            s += frame.e[static_cast<size_t>(a)][static_cast<size_t>(i)] *
                 frame.e[static_cast<size_t>(b)][static_cast<size_t>(j)] * tij;
          }
        out.at(a, b, c) = s;
      }
  return out;
}

}  // namespace randers
