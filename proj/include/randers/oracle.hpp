#pragma once

// Independent ground truth for the closed-form constructions: the two
// constrained minimum-norm problems, solved by generic linear algebra in an
// alpha-orthonormal frame (where the tensor norm is the plain Euclidean norm
// of the unknown vector). Shares only geometry primitives with the formula
// path; none of the connection-module constructions are called here.

#include <span>

#include "randers/geometry.hpp"

namespace randers {

struct QuadraticProgramResult {
  Vec minimizer;          // flattened unknown vector
  double objective = 0.0; // squared tensor norm at the minimizer
  bool feasible = false;
  double residual = 0.0;  // constraint residual norm
};

/// Minimum-norm skew map for one direction X: frame components
/// a_jk = alpha(A(X, e_j), e_k) with a skew, subject to A(X, beta#) = -nabla*_X beta#.
struct MinNormAResult {
  QuadraticProgramResult qp;
  AdaptedFrame frame;
  SquareMatrix a_frame;  // full skew matrix a_jk reconstructed from the minimizer
};

MinNormAResult min_norm_A(const PointState& ps, std::span<const double> x,
                          double feas_tol = 1e-9);

/// Minimum achievable squared torsion norm over all compatible connections
/// nabla° + B with alpha(B(X,Y),Z) = -alpha(B(X,Z),Y) and B(X, beta#) = 0.
/// Unknowns are the free frame components of B; the base torsion is evaluated
/// from its displayed four-term formula using geometry primitives only.
struct MinNormTResult {
  QuadraticProgramResult qp;
  AdaptedFrame frame;
  Tensor12 base_torsion;     // frame components the optimization starts from
  Tensor12 optimal_torsion;  // frame components at the minimizer
  Tensor12 optimal_B;        // frame components of the minimizing B
};

MinNormTResult min_norm_T(const PointState& ps);

}  // namespace randers
