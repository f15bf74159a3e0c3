#include "randers/transport.hpp"

#include <cmath>

#include "randers/connection.hpp"
#include "randers/error.hpp"

namespace randers {

Vec Curve::position(double t) const {
  Vec p(components.size());
  for (size_t i = 0; i < components.size(); ++i) p[i] = components[i].eval_param(t, 0.0).first;
  return p;
}

Vec Curve::velocity(double t) const {
  Vec v(components.size());
  for (size_t i = 0; i < components.size(); ++i) v[i] = components[i].eval_param(t, 1.0).second;
  return v;
}

std::string to_string(ConnectionKind k) {
  switch (k) {
    case ConnectionKind::kLeviCivita: return "levi_civita";
    case ConnectionKind::kNablaCirc: return "nabla_circ";
    case ConnectionKind::kExtremal: return "extremal";
  }
  return "unknown";
}

namespace {

// Connection coefficients at a curve point, per the requested kind.
Tensor12 connection_at(const FieldSpec& spec, const Vec& p, ConnectionKind kind) {
  const PointState ps = point_state(spec, p);
  if (kind == ConnectionKind::kLeviCivita) {
    Tensor12 coeffs(ps.n(), Basis::kChart);
    for (int i = 0; i < ps.n(); ++i)
      for (int j = 0; j < ps.n(); ++j)
        for (int k = 0; k < ps.n(); ++k) coeffs.at(i, j, k) = ps.gamma(k, i, j);
    return coeffs;
  }
  Tensor12 coeffs = nabla_circ_coeffs(ps);
  if (kind == ConnectionKind::kExtremal && ps.K2 > 0.0) {
    const Tensor12 b = recover_B(ps);
    for (size_t i = 0; i < coeffs.c.size(); ++i) coeffs.c[i] += b.c[i];
  }
  return coeffs;
}

// v' = -Gamma(gamma(t))(gamma'(t), v)
Vec rhs(const FieldSpec& spec, const Curve& curve, ConnectionKind kind, double t,
        const Vec& v) {
  const Vec p = curve.position(t);
  if (!spec.domain().contains(p, 1e-9))
    throw NumericalError("curve leaves the domain box at t = " + std::to_string(t));
  const Vec vel = curve.velocity(t);
  const Tensor12 coeffs = connection_at(spec, p, kind);
  const int n = spec.n();
  Vec out(static_cast<size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        s += coeffs.at(i, j, k) * vel[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
    out[static_cast<size_t>(k)] = -s;
  }
  return out;
}

}  // namespace

TransportResult parallel_transport(const FieldSpec& spec, const Curve& curve,
                                   std::span<const double> v0, ConnectionKind kind,
                                   int steps, const GBReport* gb) {
  if (steps < 1) throw ConfigError("transport needs at least one step");
  if (static_cast<int>(curve.components.size()) != spec.n())
    throw ConfigError("curve dimension does not match field dimension");
  if (static_cast<int>(v0.size()) != spec.n())
    throw ConfigError("initial vector dimension does not match field dimension");

  if (kind != ConnectionKind::kLeviCivita) {
    GBReport local;
    if (!gb) {
      local = gb_criterion(spec, 200, 1);
      gb = &local;
    }
    if (gb->verdict == GBVerdict::kInvalidRanders)
      throw InvalidRandersError("transport under a compatible connection: the field is not a valid Randers metric");
    if (gb->verdict == GBVerdict::kNotGeneralizedBerwald)
      throw NotBerwaldError("transport under a compatible connection requires a generalized Berwald field");
  }

  const double h = (curve.t1 - curve.t0) / steps;
  Vec v(v0.begin(), v0.end());

  // reference values at the start point
  const Vec p0 = curve.position(curve.t0);
  if (!spec.domain().contains(p0, 1e-9))
    throw NumericalError("curve starts outside the domain box");
  const PointState start = point_state(spec, p0);
  const double alpha0 = start.alpha(v, v);
  const double beta0 = start.beta_of(v);
  const double f0 = randers_norm(start, v);

  TransportResult res;
  res.steps = steps;

  auto record = [&](double t, const Vec& vv) {
    const Vec pos = curve.position(t);
    if (!spec.domain().contains(pos, 1e-9))
      throw NumericalError("curve leaves the domain box at t = " + std::to_string(t));
    const PointState ps = point_state(spec, pos);
    res.drift_alpha = std::max(res.drift_alpha, std::abs(ps.alpha(vv, vv) - alpha0));
    res.drift_beta = std::max(res.drift_beta, std::abs(ps.beta_of(vv) - beta0));
    res.drift_f = std::max(res.drift_f, std::abs(randers_norm(ps, vv) - f0));
  };

  record(curve.t0, v);
  for (int s = 0; s < steps; ++s) {
    const double t = curve.t0 + h * s;
    const Vec k1 = rhs(spec, curve, kind, t, v);
    const Vec k2 = rhs(spec, curve, kind, t + 0.5 * h, axpy(0.5 * h, k1, v));
    const Vec k3 = rhs(spec, curve, kind, t + 0.5 * h, axpy(0.5 * h, k2, v));
    const Vec k4 = rhs(spec, curve, kind, t + h, axpy(h, k3, v));
    for (size_t i = 0; i < v.size(); ++i)
      v[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    record(t + h, v);
  }
  res.final_vector = v;
  return res;
}

}  // namespace randers
