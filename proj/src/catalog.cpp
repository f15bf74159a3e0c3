#include <array>
#include <string>
#include <vector>

#include "randers/config.hpp"
#include "randers/error.hpp"

namespace randers {

namespace {

// Desk-scale fields exercising every branch of the toolkit:
//  - flat-const: Euclidean metric, constant one-form; every tensor vanishes.
//  - helical:    Euclidean metric, rotating one-form of constant length; the
//                orthogonal distribution is non-integrable, so the extremal
//                connection differs from nabla°.
//  - shear:      |beta#| varies; not generalized Berwald (failure case).
//  - warped-2d:  curved metric, constant-length beta with dbeta = 0; the
//                integrable case where the extremal connection is nabla°.

constexpr const char* kFlatConst = R"json({
  "dimension": 3,
  "metric": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
  "beta": ["0.5", "0", "0"],
  "domain": {"min": [-1, -1, -1], "max": [1, 1, 1]},
  "samples": 200,
  "seed": 1,
  "points": [[0, 0, 0], [0.3, -0.2, 0.5]],
  "curves": [{"components": ["t - 0.5", "0.1", "-0.2"], "t0": 0, "t1": 1, "steps": 1000, "v0": [1, 0, 0]}]
})json";

constexpr const char* kHelical = R"json({
  "dimension": 3,
  "metric": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
  "beta": ["0.5*cos(x3)", "0.5*sin(x3)", "0"],
  "domain": {"min": [-2, -2, -2], "max": [2, 2, 2]},
  "samples": 200,
  "seed": 1,
  "points": [[0, 0, 0], [0.1, 0.2, 0.3]],
  "curves": [{"components": ["0", "0", "t"], "t0": 0, "t1": 1.5707963267948966, "steps": 1000, "v0": [1, 0, 0]}]
})json";

constexpr const char* kShear = R"json({
  "dimension": 2,
  "metric": [["1", "0"], ["0", "1"]],
  "beta": ["0", "x1/2"],
  "domain": {"min": [-0.9, -0.9], "max": [0.9, 0.9]},
  "samples": 200,
  "seed": 1,
  "points": [[0.5, 0]]
})json";

constexpr const char* kWarped2d = R"json({
  "dimension": 2,
  "metric": [["1", "0"], ["0", "exp(2*x1)"]],
  "beta": ["0.5", "0"],
  "domain": {"min": [-1, -1], "max": [1, 1]},
  "samples": 200,
  "seed": 1,
  "points": [[0, 0], [0.2, -0.3]],
  "curves": [{"components": ["0.9*sin(5*t)", "0"], "t0": 0, "t1": 1, "steps": 1000, "v0": [0.3, 1]}]
})json";

struct Entry {
  const char* name;
  const char* json;
};

constexpr std::array<Entry, 4> kCatalog{{
    {"flat-const", kFlatConst},
    {"helical", kHelical},
    {"shear", kShear},
    {"warped-2d", kWarped2d},
}};

}  // namespace

std::vector<std::string> example_names() {
  std::vector<std::string> names;
  for (const auto& e : kCatalog) names.emplace_back(e.name);
  return names;
}

const char* example_config_json(const std::string& name) {
  for (const auto& e : kCatalog)
    if (name == e.name) return e.json;
  std::string known;
  for (const auto& e : kCatalog) known += std::string(known.empty() ? "" : ", ") + e.name;
  throw ConfigError("unknown example \"" + name + "\" (known: " + known + ")");
}

}  // namespace randers
