#pragma once

// Shared helpers for the unit suites: finite-difference oracles and a few
// canned fields. Oracles here stay independent of the production derivative
// path (plain central differences on the expression strings).

#include <cmath>
#include <vector>

#include "randers/config.hpp"
#include "randers/geometry.hpp"
#include "randers/sampling.hpp"

namespace testutil {

using randers::FieldSpec;
using randers::SquareMatrix;
using randers::Vec;

inline double fd_derivative(const randers::Expression& e, const Vec& p, const Vec& dir,
                            double h = 1e-6) {
  Vec plus = p, minus = p;
  for (size_t i = 0; i < p.size(); ++i) {
    plus[i] += h * dir[i];
    minus[i] -= h * dir[i];
  }
  return (e.eval(plus) - e.eval(minus)) / (2.0 * h);
}

/// Christoffel symbols from finite differences of the metric entries alone.
inline double fd_christoffel(const FieldSpec& spec, const Vec& p, int k, int i, int j,
                             double h = 1e-6) {
  const int n = spec.n();
  auto metric_at = [&](const Vec& q) {
    SquareMatrix g(n);
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        const double v = spec.metric_entry(a, b).eval(q);
        g(a, b) = v;
        g(b, a) = v;
      }
    return g;
  };
  auto dg = [&](int dir, int a, int b) {
    Vec plus = p, minus = p;
    plus[static_cast<size_t>(dir)] += h;
    minus[static_cast<size_t>(dir)] -= h;
    return (metric_at(plus)(a, b) - metric_at(minus)(a, b)) / (2.0 * h);
  };
  SquareMatrix ginv;
  if (!randers::spd_inverse(metric_at(p), ginv)) return std::nan("");
  double s = 0.0;
  for (int l = 0; l < n; ++l) s += ginv(k, l) * (dg(i, j, l) + dg(j, i, l) - dg(l, i, j));
  return 0.5 * s;
}

inline randers::RunConfig example(const char* name) {
  return randers::RunConfig::from_example(name);
}

/// Euclidean base config with a custom beta, handy for edge cases.
inline randers::RunConfig euclidean2(const char* b1, const char* b2) {
  std::string json = std::string(R"({
    "dimension": 2,
    "metric": [["1", "0"], ["0", "1"]],
    "beta": [")") + b1 + R"(", ")" + b2 + R"("],
    "domain": {"min": [-1, -1], "max": [1, 1]}
  })";
  return randers::RunConfig::from_json_text(json);
}

/// Off-diagonal position-dependent metric with beta = g(., X) for the unit
/// field X = (0, 0.5, 0): |beta#| = 0.5 everywhere, dbeta != 0, and
/// dbeta(., beta#) != 0, so every term of the torsion correction fires.
inline randers::RunConfig twisted3() {
  return randers::RunConfig::from_json_text(R"json({
    "dimension": 3,
    "metric": [["1 + x2^2", "x2", "0"], ["x2", "1", "0"], ["0", "0", "1"]],
    "beta": ["0.5*x2", "0.5", "0"],
    "domain": {"min": [-1, -1, -1], "max": [1, 1, 1]},
    "samples": 200,
    "seed": 1
  })json");
}

/// Rotation axis tilted by position: constant length, while dbeta is active
/// both on the orthogonal distribution (nonzero B, non-integrable) and
/// against beta# (both torsion-correction terms nonzero).
inline randers::RunConfig tilted3() {
  return randers::RunConfig::from_json_text(R"json({
    "dimension": 3,
    "metric": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    "beta": ["0.5*cos(x3)", "0.5*sin(x3)*cos(x1)", "0.5*sin(x3)*sin(x1)"],
    "domain": {"min": [-2, -2, -2], "max": [2, 2, 2]},
    "samples": 200,
    "seed": 1
  })json");
}

/// Four-dimensional rotating one-form of constant length.
inline randers::RunConfig helical4() {
  return randers::RunConfig::from_json_text(R"json({
    "dimension": 4,
    "metric": [["1", "0", "0", "0"], ["0", "1", "0", "0"],
               ["0", "0", "1", "0"], ["0", "0", "0", "1"]],
    "beta": ["0.5*cos(x4)", "0.5*sin(x4)", "0", "0"],
    "domain": {"min": [-2, -2, -2, -2], "max": [2, 2, 2, 2]},
    "samples": 200,
    "seed": 1
  })json");
}

}  // namespace testutil
