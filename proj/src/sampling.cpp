#include "randers/sampling.hpp"

#include <cmath>

#include "randers/error.hpp"
#include "randers/geometry.hpp"

namespace randers {

double radical_inverse(uint64_t index, uint32_t base) {
  double inv_base = 1.0 / base;
  double f = inv_base;
  double r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % base);
    index /= base;
    f *= inv_base;
  }
  return r;
}

namespace {
constexpr uint32_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};
}

std::vector<Vec> sample_box(const DomainBox& box, int count, uint64_t seed) {
  const size_t n = box.min.size();
  if (n > std::size(kPrimes))
    throw ConfigError("sampling supports dimension up to " +
                      std::to_string(std::size(kPrimes)));
  SplitMix64 rng(seed);
  Vec shift(n);
  for (size_t i = 0; i < n; ++i) shift[i] = rng.uniform();

  std::vector<Vec> pts;
  pts.reserve(static_cast<size_t>(count));
  for (int s = 0; s < count; ++s) {
    Vec p(n);
    for (size_t i = 0; i < n; ++i) {
      double u = radical_inverse(static_cast<uint64_t>(s) + 1, kPrimes[i]) + shift[i];
      u -= std::floor(u);
      p[i] = box.min[i] + u * (box.max[i] - box.min[i]);
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

Vec random_point(const DomainBox& box, SplitMix64& rng) {
  const size_t n = box.min.size();
  Vec p(n);
  for (size_t i = 0; i < n; ++i) p[i] = rng.uniform(box.min[i], box.max[i]);
  return p;
}

Vec random_direction(int n, SplitMix64& rng) {
  Vec v(static_cast<size_t>(n));
  for (auto& x : v) x = rng.uniform(-1.0, 1.0);
  return v;
}

}  // namespace randers
