#pragma once

// Randers norm and the generalized Berwald criterion: a Randers metric
// admits a compatible linear connection exactly when the dual vector field
// beta# has constant Riemannian length K (possibly zero).

#include <cstdint>
#include <span>
#include <string>

#include "randers/geometry.hpp"

namespace randers {

/// F(v) = sqrt(alpha(v,v)) + beta(v)
double randers_norm(const PointState& ps, std::span<const double> v);

enum class GBVerdict {
  kRiemannian,            // beta = 0 everywhere sampled (K = 0)
  kGeneralizedBerwald,    // constant K > 0, valid Randers metric
  kNotGeneralizedBerwald,
  kInvalidRanders,        // some sampled |beta#| >= 1
};

std::string to_string(GBVerdict v);

struct LengthStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double std = 0.0;
};

struct GBReport {
  GBVerdict verdict = GBVerdict::kRiemannian;
  double K = 0.0;          // from the mean of |beta#|^2
  LengthStats stats;       // of |beta#| over the sample set
  int samples = 0;
  uint64_t seed = 0;

  bool admits_connection() const {
    return verdict == GBVerdict::kRiemannian ||
           verdict == GBVerdict::kGeneralizedBerwald;
  }
};

/// Classify the field from |beta#|^2 on a seeded quasi-random sample of the
/// domain box. `length_tol` is the relative constancy tolerance on |beta#|^2.
GBReport gb_criterion(const FieldSpec& spec, int samples, uint64_t seed,
                      double length_tol = 1e-9);

}  // namespace randers
