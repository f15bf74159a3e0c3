#include "randers/gb.hpp"

#include <algorithm>
#include <cmath>

#include "randers/error.hpp"
#include "randers/sampling.hpp"

namespace randers {

double randers_norm(const PointState& ps, std::span<const double> v) {
  const double a = ps.alpha(v, v);
  return std::sqrt(std::max(a, 0.0)) + ps.beta_of(v);
}

std::string to_string(GBVerdict v) {
  switch (v) {
    case GBVerdict::kRiemannian: return "riemannian";
    case GBVerdict::kGeneralizedBerwald: return "generalized_berwald";
    case GBVerdict::kNotGeneralizedBerwald: return "not_generalized_berwald";
    case GBVerdict::kInvalidRanders: return "invalid_randers";
  }
  return "unknown";
}

GBReport gb_criterion(const FieldSpec& spec, int samples, uint64_t seed,
                      double length_tol) {
  if (samples < 2) throw ConfigError("gb_criterion needs at least 2 samples");

  const auto pts = sample_box(spec.domain(), samples, seed);

  // |beta#|^2 at each sample; the verdict works on the squared lengths to
  // keep square-root noise away from the tolerance boundary.
  std::vector<double> len2;
  len2.reserve(pts.size());
  for (const Vec& p : pts) {
    const PointState ps = point_state(spec, p);
    len2.push_back(ps.K2);
  }

  const auto [mn_it, mx_it] = std::minmax_element(len2.begin(), len2.end());
  const double mn = *mn_it, mx = *mx_it;
  double mean2 = 0.0;
  for (double v : len2) mean2 += v;
  mean2 /= static_cast<double>(len2.size());

  GBReport rep;
  rep.samples = samples;
  rep.seed = seed;

  double mean = 0.0, var = 0.0;
  for (double v : len2) mean += std::sqrt(v);
  mean /= static_cast<double>(len2.size());
  for (double v : len2) {
    const double d = std::sqrt(v) - mean;
    var += d * d;
  }
  var /= static_cast<double>(len2.size());
  rep.stats.min = std::sqrt(mn);
  rep.stats.max = std::sqrt(mx);
  rep.stats.mean = mean;
  rep.stats.std = std::sqrt(var);

  if (mx >= 1.0) {
    rep.verdict = GBVerdict::kInvalidRanders;
    rep.K = std::sqrt(mean2);
    return rep;
  }
  if (mx <= length_tol) {
    rep.verdict = GBVerdict::kRiemannian;
    rep.K = 0.0;
    return rep;
  }
  if ((mx - mn) / mx <= length_tol) {
    rep.verdict = GBVerdict::kGeneralizedBerwald;
    rep.K = std::sqrt(mean2);
    return rep;
  }
  rep.verdict = GBVerdict::kNotGeneralizedBerwald;
  rep.K = std::sqrt(mean2);
  return rep;
}

}  // namespace randers
