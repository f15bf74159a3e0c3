#pragma once

// Closed-form construction of compatible linear connections for a
// generalized Berwald Randers metric: the difference tensor A and the
// connection nabla° it defines, its torsion T°, the correction Omega whose
// sum with T° is the torsion of the extremal (minimum-torsion) compatible
// connection, the recovered tensor B with nabla_ext = nabla° + B, the
// adapted-frame torsion components, and the integrability defect of the
// orthogonal distribution.

#include <span>

#include "randers/geometry.hpp"

namespace randers {

/// d(beta)_ij = d_i beta_j - d_j beta_i, computed from the covariant
/// derivative (the Lévi-Civita connection is torsion-free).
SquareMatrix dbeta_matrix(const PointState& ps);

/// A(X,Y) = alpha(nabla*_X beta#, Y)/K^2 beta# - alpha(Y, beta#)/K^2 nabla*_X beta#.
/// K = 0 returns the zero tensor (Riemannian case). Pointwise formula; callers
/// gate on the generalized Berwald criterion.
Tensor12 difference_tensor(const PointState& ps);

/// Coefficients of nabla°: Gamma* + A, stored like a Tensor12 (i, j, k).
Tensor12 nabla_circ_coeffs(const PointState& ps);

/// T°(X,Y) = A(X,Y) - A(Y,X)
Tensor12 torsion_circ(const PointState& ps);

/// The torsion correction of the extremal compatible connection. Requires K > 0.
Tensor12 omega(const PointState& ps);

/// Torsion of the extremal compatible connection: T° + Omega. Requires K > 0.
Tensor12 extremal_torsion(const PointState& ps);

/// Adapted-frame components of the extremal torsion, indices a, b, c over
/// the orthogonal frame vectors e_1..e_{n-1}, n marking the beta#/K slot.
struct FrameTorsionComponents {
  int dim = 0;                 // ambient dimension n
  std::vector<double> c_ab;    // T^c_ab, (n-1)^3, identically zero
  std::vector<double> n_ab;    // T^n_ab, (n-1)^2
  std::vector<double> n_an;    // T^n_an, (n-1)
  std::vector<double> c_an;    // T^c_an, (n-1)^2 indexed (a, c)

  double tc_ab(int a, int b, int c) const {
    return c_ab[(static_cast<size_t>(a) * (dim - 1) + b) * (dim - 1) + c];
  }
  double tn_ab(int a, int b) const { return n_ab[static_cast<size_t>(a) * (dim - 1) + b]; }
  double tn_an(int a) const { return n_an[static_cast<size_t>(a)]; }
  double tc_an(int a, int c) const { return c_an[static_cast<size_t>(a) * (dim - 1) + c]; }

  /// Assemble the full frame-basis torsion tensor from the blocks.
  Tensor12 to_tensor() const;
};

/// Evaluate the extremal torsion blockwise from the frame-based identities.
/// `frame` must be adapted (e_n = beta#/K).
FrameTorsionComponents extremal_torsion_frame(const PointState& ps,
                                              const AdaptedFrame& frame);

/// The unique B with B(X_perp, .) = 0, B(X, beta#) = 0 and
/// alpha(B(beta#, X_perp), Y_perp) = -1/2 dbeta(X_perp, Y_perp); it satisfies
/// T° + (B(X,Y) - B(Y,X)) = extremal torsion, so nabla° + B is the extremal
/// compatible connection. Requires K > 0.
Tensor12 recover_B(const PointState& ps);

/// max over coordinate pairs a < b of |alpha(beta#, [E_a_perp, E_b_perp])(p)|
/// for the projected coordinate fields E_a_perp = d_a - beta(d_a)/K^2 beta#.
/// Zero exactly when the orthogonal distribution is integrable at p.
double integrability_defect(const FieldSpec& spec, std::span<const double> p);

}  // namespace randers
