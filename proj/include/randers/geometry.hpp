#pragma once

// Pointwise Riemannian data for a Randers field: metric, inverse, Christoffel
// symbols of the Lévi-Civita connection, the one-form beta and its dual
// vector field, covariant derivatives of the dual field, projections,
// adapted orthonormal frames, and the tensor inner product.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "randers/expr.hpp"
#include "randers/linalg.hpp"

namespace randers {

struct DomainBox {
  Vec min;
  Vec max;

  bool contains(std::span<const double> p, double slack = 1e-12) const;
};

/// A Randers field on a chart: symmetric metric g_ij (upper triangle stored),
/// one-form components beta_i, and the domain box the expressions are valid on.
class FieldSpec {
 public:
  /// `metric_upper` lists g_ij for i <= j in row order:
  /// g11, g12, ..., g1n, g22, g23, ..., gnn.
  FieldSpec(int dimension, std::vector<Expression> metric_upper,
            std::vector<Expression> beta, DomainBox domain);

  /// Convenience: parse component strings. `metric_rows` is the full n x n
  /// matrix; entries below the diagonal are ignored.
  static FieldSpec from_strings(int dimension,
                                const std::vector<std::vector<std::string>>& metric_rows,
                                const std::vector<std::string>& beta,
                                const DomainBox& domain);

  int n() const { return n_; }
  const DomainBox& domain() const { return domain_; }
  const Expression& metric_entry(int i, int j) const;  // i <= j
  const Expression& beta_entry(int i) const { return beta_[static_cast<size_t>(i)]; }

 private:
  int n_;
  std::vector<Expression> metric_upper_;
  std::vector<Expression> beta_;
  DomainBox domain_;
};

/// Raw field values and first derivatives at one point:
/// g, beta, and their partials in every coordinate direction.
struct FieldEval {
  Vec point;
  SquareMatrix g;
  std::vector<SquareMatrix> dg;  // dg[k](i,j) = d_k g_ij
  Vec beta;
  std::vector<Vec> dbeta;  // dbeta[k][i] = d_k beta_i
};

FieldEval evaluate_field(const FieldSpec& spec, std::span<const double> p);

/// Derivatives of the dual vector field and of K^2 = alpha(beta#, beta#),
/// assembled from a FieldEval:
///   d_j beta# = g^-1 (d_j beta - (d_j g) beta#)
///   d_j K^2   = (d_j beta) . beta# + beta . (d_j beta#)
struct SharpDerivatives {
  Vec beta_sharp;
  std::vector<Vec> d_beta_sharp;
  Vec d_k2;
  double k2 = 0.0;
};
SharpDerivatives sharp_derivatives(const FieldEval& fe);

/// Everything the connection formulas consume, evaluated at one point.
struct PointState {
  Vec point;
  SquareMatrix g;
  SquareMatrix ginv;
  std::vector<double> gamma_;  // Christoffel of the Lévi-Civita connection
  Vec beta;                    // beta_i
  Vec beta_sharp;              // beta^k = g^kj beta_j
  SquareMatrix nabla_beta;     // N(i,j) = alpha(nabla*_{d_i} beta#, d_j)
  SquareMatrix nabla_beta_up;  // N_up(i,k) = (nabla*_{d_i} beta#)^k
  double K2 = 0.0;             // alpha(beta#, beta#)

  int n() const { return g.n(); }
  double gamma(int k, int i, int j) const {
    return gamma_[(static_cast<size_t>(k) * n() + i) * n() + j];
  }
  double& gamma(int k, int i, int j) {
    return gamma_[(static_cast<size_t>(k) * n() + i) * n() + j];
  }

  double alpha(std::span<const double> u, std::span<const double> v) const {
    return bilinear(g, u, v);
  }
  /// beta(v) = alpha(v, beta#)
  double beta_of(std::span<const double> v) const { return dot(beta, v); }
};

/// Evaluate all PointState fields. Throws NumericalError if g(p) is not
/// positive definite or an expression hits a domain error, ConfigError if
/// p lies outside the domain box.
PointState point_state(const FieldSpec& spec, std::span<const double> p);

/// Orthogonal/beta-direction split: Y = Y_perp + Y_beta with
/// Y_beta = alpha(Y, beta#)/K^2 * beta#. Requires K > 0.
struct Projection {
  Vec perp;
  Vec along_beta;
};
Projection project(const PointState& ps, std::span<const double> y);

/// Orthonormal frame e_1..e_n; when adapted, e_n = beta#/K and e_1..e_{n-1}
/// span the alpha-orthogonal complement of beta#.
struct AdaptedFrame {
  std::vector<Vec> e;  // e[i] = chart components of e_{i+1}
  bool adapted = false;

  int n() const { return static_cast<int>(e.size()); }
};

/// Deterministic Gram-Schmidt frame with e_n = beta#/K. Requires K > 0.
AdaptedFrame adapted_frame(const PointState& ps);

/// Orthonormal frame from the coordinate basis alone (no beta direction);
/// used where K = 0.
AdaptedFrame orthonormal_frame(const PointState& ps);

enum class Basis { kChart, kFrame };

/// (1,2)-tensor components S^k_ij; first lower index is the direction slot.
/// Stored row-major in (i, j, k).
struct Tensor12 {
  int dim = 0;
  Basis basis = Basis::kChart;
  std::vector<double> c;

  Tensor12() = default;
  Tensor12(int n, Basis b)
      : dim(n), basis(b), c(static_cast<size_t>(n) * n * n, 0.0) {}

  double at(int i, int j, int k) const {
    return c[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  double& at(int i, int j, int k) {
    return c[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
};

/// Squared tensor norm |T|^2 = g^ip g^jq g_kr T^k_ij T^r_pq. Equals the plain
/// sum of squared components in any alpha-orthonormal frame.
double tensor12_norm_sq(const PointState& ps, const Tensor12& t);

/// Re-express a chart-basis tensor in frame components:
/// out.at(a,b,c) = alpha(T(e_a, e_b), e_c).
Tensor12 to_frame(const PointState& ps, const Tensor12& t, const AdaptedFrame& frame);

}  // namespace randers
