#pragma once

// Deterministic sampling shared by the criterion, the verify suites, and the
// report layer. splitmix64 gives platform-independent uniforms; domain
// sampling uses a Halton sequence with a seeded Cranley-Patterson shift so
// the points are quasi-random yet reproducible for a given seed.

#include <cstdint>
#include <span>
#include <vector>

#include "randers/linalg.hpp"

namespace randers {

struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

/// Halton radical inverse in the given base.
double radical_inverse(uint64_t index, uint32_t base);

struct DomainBox;

/// `count` quasi-random points in the box (Halton + seeded shift).
std::vector<Vec> sample_box(const DomainBox& box, int count, uint64_t seed);

/// One pseudo-random point in the box.
Vec random_point(const DomainBox& box, SplitMix64& rng);

/// Vector with components uniform in [-1, 1].
Vec random_direction(int n, SplitMix64& rng);

}  // namespace randers
