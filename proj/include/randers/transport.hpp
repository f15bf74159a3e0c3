#pragma once

// Parallel transport along parametrized curves under the Lévi-Civita
// connection, nabla°, or the extremal compatible connection, with drift
// diagnostics for alpha, beta, and the Randers norm F. A compatible
// connection keeps all three flat along the curve; the drifts are the
// numerical residuals of exactly that statement.

#include <cstdint>
#include <span>
#include <vector>

#include "randers/expr.hpp"
#include "randers/gb.hpp"
#include "randers/geometry.hpp"

namespace randers {

struct Curve {
  std::vector<Expression> components;  // expressions in t
  double t0 = 0.0;
  double t1 = 1.0;

  Vec position(double t) const;
  Vec velocity(double t) const;
};

enum class ConnectionKind { kLeviCivita, kNablaCirc, kExtremal };

std::string to_string(ConnectionKind k);

struct TransportResult {
  Vec final_vector;
  int steps = 0;
  double drift_alpha = 0.0;  // max_t |alpha(v,v) - alpha(v0,v0)|
  double drift_beta = 0.0;   // max_t |beta(v) - beta(v0)|
  double drift_f = 0.0;      // max_t |F(v) - F(v0)|
};

/// Fixed-step RK4 integration of v' = -Gamma_conn(gamma(t))(gamma'(t), v).
/// For a non-Lévi-Civita connection the field must pass the generalized
/// Berwald criterion; pass a precomputed report in `gb` to skip the check
/// (NotBerwaldError / InvalidRandersError otherwise).
TransportResult parallel_transport(const FieldSpec& spec, const Curve& curve,
                                   std::span<const double> v0, ConnectionKind kind,
                                   int steps, const GBReport* gb = nullptr);

}  // namespace randers
