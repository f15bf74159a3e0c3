#pragma once

// Forward-mode dual numbers: value plus one derivative channel. Evaluating
// an expression on Dual inputs propagates exact first derivatives (no
// truncation error), which is all the covariant machinery ever needs.

#include <cmath>
#include <string>

#include "randers/error.hpp"

namespace randers {

struct Dual {
  double val = 0.0;
  double dot = 0.0;

  constexpr Dual() = default;
  constexpr Dual(double v) : val(v) {}
  constexpr Dual(double v, double d) : val(v), dot(d) {}

  constexpr Dual operator-() const { return {-val, -dot}; }

  constexpr Dual operator+(Dual o) const { return {val + o.val, dot + o.dot}; }
  constexpr Dual operator-(Dual o) const { return {val - o.val, dot - o.dot}; }

  // product rule
  constexpr Dual operator*(Dual o) const {
    return {val * o.val, dot * o.val + val * o.dot};
  }

  Dual operator/(Dual o) const {
    if (o.val == 0.0) throw NumericalError("division by zero in expression");
    return {val / o.val, (dot * o.val - val * o.dot) / (o.val * o.val)};
  }
};

inline Dual sin(Dual a) { return {std::sin(a.val), a.dot * std::cos(a.val)}; }
inline Dual cos(Dual a) { return {std::cos(a.val), -a.dot * std::sin(a.val)}; }
inline Dual exp(Dual a) {
  const double e = std::exp(a.val);
  return {e, a.dot * e};
}

inline Dual sqrt(Dual a) {
  if (a.val <= 0.0)
    throw NumericalError("sqrt of nonpositive value (" +
                         std::to_string(a.val) + ") in expression");
  const double s = std::sqrt(a.val);
  return {s, a.dot / (2.0 * s)};
}

// Integer powers by repeated multiplication; the product rule carries the
// derivative exactly. Negative exponents go through the guarded division.
inline Dual pow_int(Dual a, long long e) {
  if (e == 0) return {1.0, 0.0};
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e)
                               : static_cast<unsigned long long>(e);
  Dual r{1.0, 0.0};
  for (unsigned long long i = 0; i < k; ++i) r = r * a;
  if (e < 0) r = Dual{1.0, 0.0} / r;
  return r;
}

}  // namespace randers
