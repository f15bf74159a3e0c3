// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in the assertions.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "randers/capi.h"
#include "randers/config.hpp"
#include "randers/connection.hpp"
#include "randers/oracle.hpp"
#include "randers/sampling.hpp"
#include "randers/transport.hpp"

using namespace randers;

namespace {

constexpr double kPi2 = 1.5707963267948966;  // pi/2

struct Criterion {
  std::string label;
  bool pass = true;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
  void expect_near(double got, double want, double tol, const std::string& what) {
    expect(std::abs(got - want) <= tol,
           what + ": got " + std::to_string(got) + ", want " + std::to_string(want) +
               " +- " + std::to_string(tol));
  }
};

std::vector<Vec> random_points(const FieldSpec& spec, int count, uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Vec> pts;
  for (int i = 0; i < count; ++i) pts.push_back(random_point(spec.domain(), rng));
  return pts;
}

// alpha(S(d_i, d_j), d_k)
double low(const PointState& ps, const Tensor12& t, int i, int j, int k) {
  double s = 0.0;
  for (int r = 0; r < t.dim; ++r) s += ps.g(k, r) * t.at(i, j, r);
  return s;
}

Curve make_curve(const std::vector<std::string>& comps, double t0, double t1) {
  Curve c;
  for (const auto& s : comps) c.components.push_back(Expression::parse(s, 0, true));
  c.t0 = t0;
  c.t1 = t1;
  return c;
}

double fit_slope_loglog(const std::vector<int>& steps, const std::vector<double>& drift) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(steps.size());
  for (size_t i = 0; i < steps.size(); ++i) {
    const double x = std::log10(static_cast<double>(steps[i]));
    const double y = std::log10(drift[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---- criterion 1: constant-length criterion and oracle feasibility agree ----
void criterion_1(Criterion& c) {
  for (const char* name : {"flat-const", "helical", "warped-2d"}) {
    const RunConfig cfg = RunConfig::from_example(name);
    const GBReport gb = gb_criterion(cfg.spec(), 200, 7);
    c.expect(gb.verdict == GBVerdict::kGeneralizedBerwald,
             std::string(name) + ": expected generalized_berwald, got " +
                 to_string(gb.verdict));
    for (const Vec& p : random_points(cfg.spec(), 20, 101)) {
      const PointState ps = point_state(cfg.spec(), p);
      const AdaptedFrame fr = adapted_frame(ps);
      for (int d = 0; d < ps.n(); ++d) {
        const MinNormAResult res =
            min_norm_A(ps, fr.e[static_cast<size_t>(d)], 1e-9);
        c.expect(res.qp.feasible, std::string(name) + ": oracle infeasible at a point "
                                                      "of a constant-length field");
      }
    }
  }

  const RunConfig shear = RunConfig::from_example("shear");
  const GBReport gb = gb_criterion(shear.spec(), 200, 7);
  c.expect(gb.verdict == GBVerdict::kNotGeneralizedBerwald,
           "shear: expected not_generalized_berwald, got " + to_string(gb.verdict));
  const PointState ps = point_state(shear.spec(), Vec{0.5, 0.0});
  const AdaptedFrame fr = adapted_frame(ps);
  bool any_infeasible = false;
  for (int d = 0; d < ps.n(); ++d)
    if (!min_norm_A(ps, fr.e[static_cast<size_t>(d)], 1e-9).qp.feasible)
      any_infeasible = true;
  c.expect(any_infeasible, "shear at (0.5, 0): every direction came back feasible");
}

// ---- criterion 2: closed-form difference tensor is the oracle minimizer ----
void criterion_2(Criterion& c) {
  for (const char* name : {"helical", "warped-2d"}) {
    const RunConfig cfg = RunConfig::from_example(name);
    for (const Vec& p : random_points(cfg.spec(), 20, 202)) {
      const PointState ps = point_state(cfg.spec(), p);
      const AdaptedFrame fr = adapted_frame(ps);
      const Tensor12 a_frame = to_frame(ps, difference_tensor(ps), fr);
      for (int d = 0; d < ps.n(); ++d) {
        const MinNormAResult res = min_norm_A(ps, fr.e[static_cast<size_t>(d)]);
        for (int j = 0; j < ps.n(); ++j)
          for (int k = 0; k < ps.n(); ++k)
            c.expect(std::abs(res.a_frame(j, k) - a_frame.at(d, j, k)) <= 1e-8,
                     std::string(name) + ": formula/oracle slice mismatch");
      }
    }
  }
  const PointState origin = point_state(RunConfig::from_example("helical").spec(),
                                        Vec{0, 0, 0});
  const MinNormAResult res = min_norm_A(origin, Vec{0, 0, 1});
  c.expect_near(res.qp.objective, 2.0, 1e-8, "helical origin |iota_{d3} A|^2");
}

// ---- criterion 3: compatible transport preserves F; RK4 order ----
void criterion_3(Criterion& c) {
  const RunConfig cfg = RunConfig::from_example("helical");
  const Curve axis = make_curve({"0", "0", "t"}, 0.0, kPi2);

  const TransportResult circ = parallel_transport(cfg.spec(), axis, Vec{1, 0, 0},
                                                  ConnectionKind::kNablaCirc, 1000);
  c.expect(circ.drift_f <= 1e-8,
           "nabla° drift_F at 1000 steps: " + std::to_string(circ.drift_f));

  const TransportResult lc = parallel_transport(cfg.spec(), axis, Vec{1, 0, 0},
                                                ConnectionKind::kLeviCivita, 1000);
  c.expect_near(lc.drift_beta, 0.5 * (1.0 - std::cos(kPi2)), 1e-6,
                "Lévi-Civita drift_beta");

  // Order measurement uses a generic initial vector on the same curve: the
  // aligned v0 = (1,0,0) rides a superconvergent (fifth-order) drift channel
  // whose 1000-step value sits at the rounding floor.
  const std::vector<int> steps{10, 100, 1000};
  std::vector<double> drift;
  for (int s : steps)
    drift.push_back(parallel_transport(cfg.spec(), axis, Vec{0.3, -0.7, 0.4},
                                       ConnectionKind::kNablaCirc, s)
                        .drift_f);
  const double slope = -fit_slope_loglog(steps, drift);
  c.expect(std::abs(slope - 4.0) <= 0.3,
           "fitted RK4 drift order " + std::to_string(slope) + " not within 4 +- 0.3");
}

// ---- criterion 4: extremal torsion norm and the torsion oracle ----
void criterion_4(Criterion& c) {
  const RunConfig cfg = RunConfig::from_example("helical");
  const PointState origin = point_state(cfg.spec(), Vec{0, 0, 0});
  c.expect_near(tensor12_norm_sq(origin, extremal_torsion(origin)), 3.0, 1e-8,
                "|T_extremal|^2 at the helical origin");
  c.expect_near(tensor12_norm_sq(origin, torsion_circ(origin)), 4.0, 1e-8,
                "|T_circ|^2 at the helical origin");
  for (const Vec& p : random_points(cfg.spec(), 20, 404)) {
    const PointState ps = point_state(cfg.spec(), p);
    const double formula = tensor12_norm_sq(ps, extremal_torsion(ps));
    const MinNormTResult res = min_norm_T(ps);
    c.expect(std::abs(res.qp.objective - formula) <= 1e-8,
             "min_norm_T objective differs from |T_extremal|^2");
  }
}

// ---- criterion 5: integrability dichotomy ----
void criterion_5(Criterion& c) {
  for (const char* name : {"flat-const", "warped-2d"}) {
    const RunConfig cfg = RunConfig::from_example(name);
    for (const Vec& p : random_points(cfg.spec(), 20, 505)) {
      const PointState ps = point_state(cfg.spec(), p);
      const double defect = integrability_defect(cfg.spec(), p);
      c.expect(defect < 1e-8, std::string(name) + ": nonzero integrability defect " +
                                  std::to_string(defect));
      const double nc = std::sqrt(tensor12_norm_sq(ps, torsion_circ(ps)));
      const double ne = std::sqrt(tensor12_norm_sq(ps, extremal_torsion(ps)));
      c.expect(std::abs(ne - nc) <= 1e-9,
               std::string(name) + ": |T| and |T_circ| differ on an integrable field");
    }
  }
  const RunConfig helical = RunConfig::from_example("helical");
  const PointState origin = point_state(helical.spec(), Vec{0, 0, 0});
  c.expect_near(integrability_defect(helical.spec(), Vec{0, 0, 0}), 0.5, 1e-6,
                "helical origin integrability defect");
  const double nc = tensor12_norm_sq(origin, torsion_circ(origin));
  const double ne = tensor12_norm_sq(origin, extremal_torsion(origin));
  c.expect(ne < nc - 0.5, "helical origin: |T|^2 not below |T_circ|^2 - 0.5");
}

// ---- criterion 6: adapted-frame component formulas ----
void criterion_6(Criterion& c) {
  const RunConfig cfg = RunConfig::from_example("helical");
  const PointState origin = point_state(cfg.spec(), Vec{0, 0, 0});
  const FrameTorsionComponents f0 = extremal_torsion_frame(origin, adapted_frame(origin));
  c.expect_near(f0.tn_ab(1, 0), 1.0, 1e-8, "helical origin T^n_{e2 e1}");
  c.expect_near(f0.tc_an(1, 0), -0.5, 1e-8, "helical origin T^{e1}_{e2 n}");

  for (const Vec& p : random_points(cfg.spec(), 20, 606)) {
    const PointState ps = point_state(cfg.spec(), p);
    const AdaptedFrame fr = adapted_frame(ps);
    const Tensor12 blocks = extremal_torsion_frame(ps, fr).to_tensor();
    const Tensor12 expanded = to_frame(ps, extremal_torsion(ps), fr);
    for (size_t idx = 0; idx < blocks.c.size(); ++idx)
      c.expect(std::abs(blocks.c[idx] - expanded.c[idx]) <= 1e-8,
               "frame block disagrees with the closed form at a random point");
  }
}

// ---- criterion 7: constraint residuals and derivative cross-checks ----
void criterion_7(Criterion& c) {
  for (const char* name : {"flat-const", "helical", "warped-2d"}) {
    const RunConfig cfg = RunConfig::from_example(name);
    for (const Vec& p : random_points(cfg.spec(), 20, 707)) {
      const PointState ps = point_state(cfg.spec(), p);
      const int n = ps.n();
      const Tensor12 a = difference_tensor(ps);
      const Tensor12 b = recover_B(ps);
      double worst = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            worst = std::max(worst, std::abs(low(ps, a, i, j, k) + low(ps, a, i, k, j)));
            worst = std::max(worst, std::abs(low(ps, b, i, j, k) + low(ps, b, i, k, j)));
          }
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          double s = ps.nabla_beta_up(i, k);
          for (int j = 0; j < n; ++j)
            s += a.at(i, j, k) * ps.beta_sharp[static_cast<size_t>(j)];
          worst = std::max(worst, std::abs(s));
          double t = 0.0;
          for (int j = 0; j < n; ++j)
            t += b.at(i, j, k) * ps.beta_sharp[static_cast<size_t>(j)];
          worst = std::max(worst, std::abs(t));
        }
      c.expect(worst <= 1e-10, std::string(name) + ": constraint residual " +
                                   std::to_string(worst) + " above 1e-10");
    }
  }

  // dual derivatives against central finite differences, all four examples
  for (const char* name : {"flat-const", "helical", "shear", "warped-2d"}) {
    const RunConfig cfg = RunConfig::from_example(name);
    const int n = cfg.spec().n();
    SplitMix64 rng(708);
    for (const Vec& p : random_points(cfg.spec(), 20, 709)) {
      const Vec dir = random_direction(n, rng);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          const Expression& e = cfg.spec().metric_entry(i, j);
          const double dual = e.eval_dual(p, dir).second;
          Vec plus = axpy(1e-6, dir, p), minus = axpy(-1e-6, dir, p);
          const double fd = (e.eval(plus) - e.eval(minus)) / 2e-6;
          c.expect(std::abs(dual - fd) <= 1e-6 * std::max(1.0, std::abs(dual)),
                   std::string(name) + ": metric derivative FD mismatch");
        }
      for (int i = 0; i < n; ++i) {
        const Expression& e = cfg.spec().beta_entry(i);
        const double dual = e.eval_dual(p, dir).second;
        Vec plus = axpy(1e-6, dir, p), minus = axpy(-1e-6, dir, p);
        const double fd = (e.eval(plus) - e.eval(minus)) / 2e-6;
        c.expect(std::abs(dual - fd) <= 1e-6 * std::max(1.0, std::abs(dual)),
                 std::string(name) + ": beta derivative FD mismatch");
      }
    }
  }
}

// ---- criterion 8: byte-identical verify reports through the C API ----
void criterion_8(Criterion& c) {
  std::string first, second;
  for (std::string* dst : {&first, &second}) {
    char* errmsg = nullptr;
    randers_run* run = randers_run_from_example("helical", &errmsg);
    if (!run) {
      randers_string_free(errmsg);
      c.expect(false, "failed to load the helical example through the C API");
      return;
    }
    randers_run_set_seed(run, 7);
    char* report = nullptr;
    const randers_status st = randers_run_verify(run, &report, &errmsg);
    c.expect(st == RANDERS_OK, "verify returned nonzero status");
    *dst = report ? report : "";
    randers_string_free(report);
    randers_string_free(errmsg);
    randers_run_free(run);
  }
  c.expect(!first.empty() && first == second,
           "verify reports with seed 7 are not byte-identical");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"1. constant-length criterion and oracle solvability agree, both directions"},
      {"2. closed-form difference tensor is the oracle's minimum-norm solution"},
      {"3. compatible transport preserves F; Lévi-Civita does not; RK4 order 4"},
      {"4. extremal torsion norm matches the torsion oracle optimum"},
      {"5. extremal connection is nabla° exactly on integrable fields"},
      {"6. adapted-frame torsion component formulas match the closed form"},
      {"7. constraint residuals <= 1e-10; dual derivatives match finite differences"},
      {"8. verify reports are byte-identical for a fixed seed"},
  };

  criterion_1(criteria[0]);
  criterion_2(criteria[1]);
  criterion_3(criteria[2]);
  criterion_4(criteria[3]);
  criterion_5(criteria[4]);
  criterion_6(criteria[5]);
  criterion_7(criteria[6]);
  criterion_8(criteria[7]);

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::printf("[%s] %s\n", c.pass ? "PASS" : "FAIL", c.label.c_str());
    if (!c.pass) {
      ++failures;
      int shown = 0;
      for (const std::string& f : c.failures) {
        std::printf("       - %s\n", f.c_str());
        if (++shown == 5) {
          std::printf("       - (%zu more)\n", c.failures.size() - 5);
          break;
        }
      }
    }
  }
  std::printf("%d/8 acceptance criteria passed\n", 8 - failures);
  return failures;
}
