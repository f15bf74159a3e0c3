#pragma once

// Run configuration: the JSON schema consumed by the CLI and the C API.
//
// {
//   "dimension": n,
//   "metric": [[expr, ...], ...],        // n x n strings; lower triangle ignored
//   "beta": [expr, ...],                 // n strings
//   "domain": {"min": [...], "max": [...]},
//   "samples": int,                      // criterion sample count
//   "seed": int,
//   "tolerances": {"length": ..., "algebraic": ..., "ode": ...},
//   "points": [[...], ...] | "random:N", // evaluation points
//   "curves": [{"components": [expr...], "t0": ..., "t1": ..., "steps": ...}]
// }

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "randers/geometry.hpp"
#include "randers/transport.hpp"

namespace randers {

struct Tolerances {
  double length = 1e-9;     // relative constancy tolerance on |beta#|^2
  double algebraic = 1e-10; // tensor identity residuals
  double ode = 1e-8;        // transport drift bound at the configured steps
};

struct CurveConfig {
  std::vector<std::string> components;
  double t0 = 0.0;
  double t1 = 1.0;
  int steps = 1000;
  std::optional<Vec> v0;  // initial vector; seeded random when absent
  Curve curve;            // parsed
};

struct RunConfig {
  std::string source;  // example name, or "config"
  int dimension = 0;
  std::vector<std::vector<std::string>> metric_rows;
  std::vector<std::string> beta_components;
  std::optional<FieldSpec> field;

  int samples = 200;
  uint64_t seed = 1;
  Tolerances tol;

  std::vector<Vec> points;  // explicit evaluation points
  int random_points = 0;    // extra "random:N" points
  std::vector<CurveConfig> curves;

  static RunConfig from_json_text(const std::string& text);
  static RunConfig from_example(const std::string& name);

  const FieldSpec& spec() const;

  /// Explicit points plus any requested random ones (seeded).
  std::vector<Vec> resolve_points() const;
};

/// Built-in example catalog.
std::vector<std::string> example_names();
const char* example_config_json(const std::string& name);  // throws ConfigError

}  // namespace randers
