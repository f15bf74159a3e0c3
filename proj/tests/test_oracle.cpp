#include <doctest.h>

#include <cmath>

#include "randers/connection.hpp"
#include "randers/oracle.hpp"
#include "randers/sampling.hpp"
#include "test_util.hpp"

using namespace randers;
using testutil::example;

TEST_CASE("zero right-hand side: minimizer and objective vanish") {
  const PointState ps = point_state(example("flat-const").spec(), Vec{0.1, 0.2, 0.3});
  SplitMix64 rng(3);
  for (int rep = 0; rep < 5; ++rep) {
    const MinNormAResult res = min_norm_A(ps, random_direction(3, rng));
    CHECK(res.qp.feasible);
    CHECK(res.qp.objective == doctest::Approx(0.0).epsilon(1e-14));
    for (double u : res.qp.minimizer) CHECK(u == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("helical origin, X = d3: objective 2 and agreement with the formula") {
  const PointState ps = point_state(example("helical").spec(), Vec{0, 0, 0});
  const MinNormAResult res = min_norm_A(ps, Vec{0, 0, 1});
  REQUIRE(res.qp.feasible);
  CHECK(res.qp.objective == doctest::Approx(2.0).epsilon(1e-10));

  // the oracle minimizer equals the closed-form slice iota_{d3} A in the frame
  const Tensor12 a_frame = to_frame(ps, difference_tensor(ps), res.frame);
  // slice with X = d3 expanded in the frame: X = e_2 here (frame is (d2, d3, d1))
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      double formula = 0.0;
      for (int d = 0; d < 3; ++d)
        formula += res.frame.e[static_cast<size_t>(d)][2] * a_frame.at(d, j, k);
      CHECK(res.a_frame(j, k) == doctest::Approx(formula).epsilon(1e-10));
    }
}

TEST_CASE("shear at (0.5, 0): infeasible, matching the criterion failure") {
  const PointState ps = point_state(example("shear").spec(), Vec{0.5, 0.0});
  const MinNormAResult res = min_norm_A(ps, Vec{1, 0});
  CHECK_FALSE(res.qp.feasible);
  CHECK(res.qp.residual > 1e-3);  // alpha(nabla*_X beta#, beta#) = 0.125 obstruction
}

TEST_CASE("formula equals oracle for every frame direction at random points") {
  for (const char* name : {"flat-const", "helical", "warped-2d"}) {
    const RunConfig cfg = example(name);
    SplitMix64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
      const PointState ps =
          point_state(cfg.spec(), random_point(cfg.spec().domain(), rng));
      const AdaptedFrame fr = adapted_frame(ps);
      const Tensor12 a_frame = to_frame(ps, difference_tensor(ps), fr);
      for (int d = 0; d < ps.n(); ++d) {
        const MinNormAResult res = min_norm_A(ps, fr.e[static_cast<size_t>(d)]);
        REQUIRE(res.qp.feasible);
        for (int j = 0; j < ps.n(); ++j)
          for (int k = 0; k < ps.n(); ++k)
            CHECK(res.a_frame(j, k) ==
                  doctest::Approx(a_frame.at(d, j, k)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("feasibility is equivalent to the generalized Berwald verdict") {
  // solvable everywhere on the constant-length examples
  for (const char* name : {"flat-const", "helical", "warped-2d"}) {
    const RunConfig cfg = example(name);
    const GBReport gb = gb_criterion(cfg.spec(), 200, 1);
    CHECK(gb.admits_connection());
    SplitMix64 rng(11);
    for (int rep = 0; rep < 10; ++rep) {
      const PointState ps =
          point_state(cfg.spec(), random_point(cfg.spec().domain(), rng));
      const AdaptedFrame fr = adapted_frame(ps);
      for (int d = 0; d < ps.n(); ++d)
        CHECK(min_norm_A(ps, fr.e[static_cast<size_t>(d)]).qp.feasible);
    }
  }

  // the shear field fails at generic points, in some direction
  const RunConfig shear = example("shear");
  CHECK_FALSE(gb_criterion(shear.spec(), 200, 1).admits_connection());
  SplitMix64 rng(13);
  int infeasible_points = 0;
  for (int rep = 0; rep < 10; ++rep) {
    const Vec q = random_point(shear.spec().domain(), rng);
    const PointState ps = point_state(shear.spec(), q);
    if (!(ps.K2 > 0.0)) continue;
    const AdaptedFrame fr = adapted_frame(ps);
    bool any_infeasible = false;
    for (int d = 0; d < ps.n(); ++d)
      if (!min_norm_A(ps, fr.e[static_cast<size_t>(d)]).qp.feasible)
        any_infeasible = true;
    if (any_infeasible) ++infeasible_points;
  }
  CHECK(infeasible_points == 10);
}

TEST_CASE("Riemannian case: constraint degenerates to the zero solution") {
  const RunConfig zero = testutil::euclidean2("0", "0");
  const PointState ps = point_state(zero.spec(), Vec{0.3, -0.3});
  const MinNormAResult res = min_norm_A(ps, Vec{1, 1});
  CHECK(res.qp.feasible);
  CHECK(res.qp.objective == doctest::Approx(0.0));
  CHECK_THROWS_AS(min_norm_T(ps), NumericalError);
}

TEST_CASE("torsion optimization on the catalog") {
  // flat-const: base torsion already zero
  {
    const PointState ps = point_state(example("flat-const").spec(), Vec{0, 0, 0});
    const MinNormTResult res = min_norm_T(ps);
    CHECK(res.qp.objective == doctest::Approx(0.0).epsilon(1e-14));
    for (double v : res.optimal_B.c) CHECK(v == doctest::Approx(0.0).epsilon(1e-12));
  }

  // helical origin: optimum 3, achieved by the closed-form extremal torsion
  {
    const PointState ps = point_state(example("helical").spec(), Vec{0, 0, 0});
    const MinNormTResult res = min_norm_T(ps);
    CHECK(res.qp.objective == doctest::Approx(3.0).epsilon(1e-8));

    const Tensor12 tc = to_frame(ps, torsion_circ(ps), res.frame);
    const Tensor12 ext = to_frame(ps, extremal_torsion(ps), res.frame);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const double antisym_b =
              res.optimal_B.at(i, j, k) - res.optimal_B.at(j, i, k);
          CHECK(antisym_b ==
                doctest::Approx(ext.at(i, j, k) - tc.at(i, j, k)).epsilon(1e-8));
        }
  }

  // warped-2d: integrable, no improvement possible, B stays zero
  {
    const PointState ps = point_state(example("warped-2d").spec(), Vec{0, 0});
    const MinNormTResult res = min_norm_T(ps);
    CHECK(res.qp.objective ==
          doctest::Approx(tensor12_norm_sq(ps, torsion_circ(ps))).epsilon(1e-8));
    for (double v : res.optimal_B.c) CHECK(v == doctest::Approx(0.0).epsilon(1e-8));
  }
}

TEST_CASE("oracle objective equals the closed-form torsion norm at random points") {
  for (const char* name : {"helical", "warped-2d"}) {
    const RunConfig cfg = example(name);
    SplitMix64 rng(17);
    for (int rep = 0; rep < 20; ++rep) {
      const PointState ps =
          point_state(cfg.spec(), random_point(cfg.spec().domain(), rng));
      const MinNormTResult res = min_norm_T(ps);
      CHECK(res.qp.objective ==
            doctest::Approx(tensor12_norm_sq(ps, extremal_torsion(ps))).epsilon(1e-8));
    }
  }
}

TEST_CASE("optimality certificates: no feasible perturbation improves either problem") {
  const PointState ps = point_state(example("helical").spec(), Vec{0.2, -0.4, 0.6});
  SplitMix64 rng(19);
  const int n = ps.n();
  const int m = n - 1;

  const AdaptedFrame fr = adapted_frame(ps);
  for (int d = 0; d < n; ++d) {
    const MinNormAResult base = min_norm_A(ps, fr.e[static_cast<size_t>(d)]);
    for (int rep = 0; rep < 34; ++rep) {
      // skew delta supported on the orthogonal block keeps A(X, beta#) intact
      SquareMatrix delta(n);
      for (int j = 0; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
          const double v = rng.uniform(-1.0, 1.0);
          delta(j, k) = v;
          delta(k, j) = -v;
        }
      double perturbed = 0.0;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const double v = base.a_frame(j, k) + delta(j, k);
          perturbed += v * v;
        }
      CHECK(perturbed >= base.qp.objective - 1e-12);
    }
  }

  const MinNormTResult tbase = min_norm_T(ps);
  for (int rep = 0; rep < 100; ++rep) {
    Tensor12 db(n, Basis::kFrame);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
          const double v = rng.uniform(-1.0, 1.0);
          db.at(i, j, k) = v;
          db.at(i, k, j) = -v;
        }
    double perturbed = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const double v = tbase.optimal_torsion.at(i, j, k) + db.at(i, j, k) -
                           db.at(j, i, k);
          perturbed += v * v;
        }
    CHECK(perturbed >= tbase.qp.objective - 1e-12);
  }
}
