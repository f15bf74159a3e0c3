#include "randers/report.hpp"

#include <cmath>

#include "randers/connection.hpp"
#include "randers/error.hpp"
#include "randers/oracle.hpp"
#include "randers/sampling.hpp"
#include "randers/verify.hpp"

namespace randers {

namespace {

using nlohmann::ordered_json;

ordered_json gb_to_json(const GBReport& gb) {
  return ordered_json{{"verdict", to_string(gb.verdict)},
                      {"K", gb.K},
                      {"length_stats",
                       {{"min", gb.stats.min},
                        {"max", gb.stats.max},
                        {"mean", gb.stats.mean},
                        {"std", gb.stats.std}}},
                      {"samples", gb.samples},
                      {"seed", gb.seed}};
}

ordered_json tensor_to_json(const Tensor12& t) {
  // row-major (i, j, k) — the storage order
  return ordered_json(t.c);
}

int verdict_status(const GBReport& gb) {
  switch (gb.verdict) {
    case GBVerdict::kInvalidRanders: return 2;
    case GBVerdict::kNotGeneralizedBerwald: return 3;
    default: return 0;
  }
}

ordered_json header(const RunConfig& cfg, const char* command) {
  return ordered_json{{"command", command},
                      {"source", cfg.source},
                      {"dimension", cfg.dimension},
                      {"samples", cfg.samples},
                      {"seed", cfg.seed}};
}

}  // namespace

RunOutcome run_check(const RunConfig& cfg) {
  const GBReport gb = gb_criterion(cfg.spec(), cfg.samples, cfg.seed, cfg.tol.length);
  RunOutcome out;
  out.status = verdict_status(gb);
  out.report = header(cfg, "check");
  out.report["gb"] = gb_to_json(gb);
  return out;
}

RunOutcome run_connection(const RunConfig& cfg) {
  const FieldSpec& spec = cfg.spec();
  const GBReport gb = gb_criterion(spec, cfg.samples, cfg.seed, cfg.tol.length);

  RunOutcome out;
  out.status = verdict_status(gb);
  out.report = header(cfg, "connection");
  out.report["gb"] = gb_to_json(gb);
  if (out.status != 0) return out;  // no compatible connection to construct

  ordered_json points = ordered_json::array();
  for (const Vec& p : cfg.resolve_points()) {
    const PointState ps = point_state(spec, p);
    ordered_json entry;
    entry["point"] = ordered_json(p);

    const Tensor12 a = difference_tensor(ps);
    const Tensor12 circ = nabla_circ_coeffs(ps);
    const Tensor12 tc = torsion_circ(ps);
    entry["difference_tensor"] = tensor_to_json(a);
    entry["nabla_circ_coeffs"] = tensor_to_json(circ);
    entry["torsion_circ"] = tensor_to_json(tc);

    if (gb.verdict == GBVerdict::kGeneralizedBerwald) {
      const Tensor12 om = omega(ps);
      const Tensor12 ext = extremal_torsion(ps);
      const Tensor12 b = recover_B(ps);
      entry["omega"] = tensor_to_json(om);
      entry["extremal_torsion"] = tensor_to_json(ext);
      entry["B"] = tensor_to_json(b);
      entry["norm_sq"] = {{"torsion_circ", tensor12_norm_sq(ps, tc)},
                          {"extremal_torsion", tensor12_norm_sq(ps, ext)}};
      entry["integrability_defect"] = integrability_defect(spec, p);

      const AdaptedFrame fr = adapted_frame(ps);
      ordered_json frame = ordered_json::array();
      for (const Vec& e : fr.e) frame.push_back(ordered_json(e));
      entry["frame"] = frame;
      const FrameTorsionComponents ftc = extremal_torsion_frame(ps, fr);
      entry["frame_torsion"] = {{"c_ab", ordered_json(ftc.c_ab)},
                                {"n_ab", ordered_json(ftc.n_ab)},
                                {"n_an", ordered_json(ftc.n_an)},
                                {"c_an", ordered_json(ftc.c_an)}};
    } else {
      // Riemannian case: every correction vanishes and nabla° is Lévi-Civita.
      const Tensor12 zero(ps.n(), Basis::kChart);
      entry["omega"] = tensor_to_json(zero);
      entry["extremal_torsion"] = tensor_to_json(zero);
      entry["B"] = tensor_to_json(zero);
      entry["norm_sq"] = {{"torsion_circ", 0.0}, {"extremal_torsion", 0.0}};
      entry["note"] = "riemannian (K = 0): compatible transport uses the Lévi-Civita connection";
    }
    points.push_back(std::move(entry));
  }
  out.report["points"] = std::move(points);
  return out;
}

RunOutcome run_transport(const RunConfig& cfg) {
  const FieldSpec& spec = cfg.spec();
  if (cfg.curves.empty()) throw ConfigError("transport requires at least one curve");
  const GBReport gb = gb_criterion(spec, cfg.samples, cfg.seed, cfg.tol.length);

  RunOutcome out;
  out.status = verdict_status(gb);
  out.report = header(cfg, "transport");
  out.report["gb"] = gb_to_json(gb);
  if (out.status != 0) return out;

  SplitMix64 rng(cfg.seed ^ 0x7472616e73ULL);
  ordered_json transports = ordered_json::array();
  for (size_t ci = 0; ci < cfg.curves.size(); ++ci) {
    const CurveConfig& cc = cfg.curves[ci];
    const Vec v0 = cc.v0 ? *cc.v0 : random_direction(spec.n(), rng);
    std::vector<ConnectionKind> kinds{ConnectionKind::kLeviCivita};
    if (gb.verdict == GBVerdict::kGeneralizedBerwald) {
      kinds.push_back(ConnectionKind::kNablaCirc);
      kinds.push_back(ConnectionKind::kExtremal);
    }
    for (ConnectionKind kind : kinds) {
      const TransportResult tr =
          parallel_transport(spec, cc.curve, v0, kind, cc.steps, &gb);
      transports.push_back(ordered_json{{"curve", ci},
                                        {"connection", to_string(kind)},
                                        {"steps", tr.steps},
                                        {"v0", ordered_json(v0)},
                                        {"final", ordered_json(tr.final_vector)},
                                        {"drift_alpha", tr.drift_alpha},
                                        {"drift_beta", tr.drift_beta},
                                        {"drift_F", tr.drift_f}});
    }
  }
  out.report["transports"] = std::move(transports);
  return out;
}

RunOutcome run_verify(const RunConfig& cfg) {
  const VerifyRun vr = run_verify_checks(cfg);

  RunOutcome out;
  out.report = header(cfg, "verify");
  out.report["gb"] = gb_to_json(vr.gb);
  ordered_json checks = ordered_json::array();
  for (const VerifyCheck& c : vr.checks) {
    ordered_json e{{"name", c.name}, {"pass", c.pass}};
    if (c.skipped) e["skipped"] = true;
    e["residual"] = c.residual;
    if (!c.note.empty()) e["note"] = c.note;
    checks.push_back(std::move(e));
  }
  out.report["checks"] = std::move(checks);
  out.report["all_pass"] = vr.all_pass();

  // Consistency is the pass condition: a non-GB field verifies cleanly as
  // long as the criterion and the oracle agree on the failure.
  if (vr.gb.verdict == GBVerdict::kInvalidRanders)
    out.status = 2;
  else
    out.status = vr.all_pass() ? 0 : 4;
  return out;
}

}  // namespace randers
