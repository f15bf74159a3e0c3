#include <doctest.h>

#include <cmath>

#include "randers/connection.hpp"
#include "randers/error.hpp"
#include "randers/geometry.hpp"
#include "test_util.hpp"

using namespace randers;
using testutil::example;

TEST_CASE("flat metric with constant beta: trivial point state") {
  const RunConfig cfg = example("flat-const");
  const PointState ps = point_state(cfg.spec(), Vec{0.2, -0.1, 0.4});
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(ps.gamma(k, i, j) == doctest::Approx(0.0));
  CHECK(ps.beta_sharp[0] == doctest::Approx(0.5));
  CHECK(ps.beta_sharp[1] == doctest::Approx(0.0));
  CHECK(ps.beta_sharp[2] == doctest::Approx(0.0));
  CHECK(ps.K2 == doctest::Approx(0.25));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(ps.nabla_beta(i, j) == doctest::Approx(0.0));
}

TEST_CASE("warped 2d metric: hand Christoffels cross-checked by finite differences") {
  const RunConfig cfg = example("warped-2d");
  const PointState ps = point_state(cfg.spec(), Vec{0.0, 0.0});

  // hand values at the origin
  CHECK(ps.gamma(0, 1, 1) == doctest::Approx(-1.0).epsilon(1e-12));  // Gamma^1_22
  CHECK(ps.gamma(1, 0, 1) == doctest::Approx(1.0).epsilon(1e-12));   // Gamma^2_12
  CHECK(ps.gamma(1, 1, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ps.gamma(0, 0, 0) == doctest::Approx(0.0));
  CHECK(ps.gamma(0, 0, 1) == doctest::Approx(0.0));
  CHECK(ps.gamma(1, 0, 0) == doctest::Approx(0.0));
  CHECK(ps.gamma(1, 1, 1) == doctest::Approx(0.0));

  // finite-difference oracle at a generic point
  const Vec q{0.3, -0.4};
  const PointState psq = point_state(cfg.spec(), q);
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const double fd = testutil::fd_christoffel(cfg.spec(), q, k, i, j);
        CHECK(psq.gamma(k, i, j) == doctest::Approx(fd).epsilon(1e-6));
      }
}

TEST_CASE("helical beta: covariant derivatives of the dual field") {
  const RunConfig cfg = example("helical");
  const PointState ps = point_state(cfg.spec(), Vec{0.0, 0.0, 0.0});

  CHECK(ps.beta_sharp[0] == doctest::Approx(0.5));
  CHECK(ps.beta_sharp[1] == doctest::Approx(0.0));
  CHECK(ps.beta_sharp[2] == doctest::Approx(0.0));

  // (nabla*_{d3} beta#) = (0, 0.5, 0); the d1 and d2 derivatives vanish
  CHECK(ps.nabla_beta_up(2, 0) == doctest::Approx(0.0));
  CHECK(ps.nabla_beta_up(2, 1) == doctest::Approx(0.5));
  CHECK(ps.nabla_beta_up(2, 2) == doctest::Approx(0.0));
  for (int k = 0; k < 3; ++k) {
    CHECK(ps.nabla_beta_up(0, k) == doctest::Approx(0.0));
    CHECK(ps.nabla_beta_up(1, k) == doctest::Approx(0.0));
  }

  // finite-difference cross-check of the lowered derivative at a generic point:
  // N_ij = d_i beta_j - Gamma^l_ij beta_l with flat metric, so N_ij = d_i beta_j.
  const Vec q{0.4, -0.3, 0.7};
  const PointState psq = point_state(cfg.spec(), q);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec dir(3, 0.0);
      dir[static_cast<size_t>(i)] = 1.0;
      const double fd = testutil::fd_derivative(cfg.spec().beta_entry(j), q, dir);
      CHECK(psq.nabla_beta(i, j) == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("projection splits against beta#") {
  const RunConfig cfg = example("flat-const");
  const PointState ps = point_state(cfg.spec(), Vec{0.0, 0.0, 0.0});

  const Projection already = project(ps, Vec{0, 1, 0});
  CHECK(already.perp[1] == doctest::Approx(1.0));
  CHECK(already.along_beta[0] == doctest::Approx(0.0));
  CHECK(already.along_beta[1] == doctest::Approx(0.0));

  const Projection identity = project(ps, ps.beta_sharp);
  for (int i = 0; i < 3; ++i) {
    CHECK(identity.perp[static_cast<size_t>(i)] == doctest::Approx(0.0));
    CHECK(identity.along_beta[static_cast<size_t>(i)] ==
          doctest::Approx(ps.beta_sharp[static_cast<size_t>(i)]));
  }

  const Projection mixed = project(ps, Vec{1, 1, 0});
  CHECK(mixed.perp[0] == doctest::Approx(0.0));
  CHECK(mixed.perp[1] == doctest::Approx(1.0));
  CHECK(mixed.along_beta[0] == doctest::Approx(1.0));
  CHECK(ps.beta_of(mixed.perp) == doctest::Approx(0.0).epsilon(1e-10));

  // K = 0 signals no beta direction
  const RunConfig zero = testutil::euclidean2("0", "0");
  const PointState zps = point_state(zero.spec(), Vec{0.1, 0.1});
  CHECK_THROWS_AS(project(zps, Vec{1, 0}), NumericalError);
}

TEST_CASE("adapted frames") {
  const RunConfig helical = example("helical");
  const PointState ps = point_state(helical.spec(), Vec{0.0, 0.0, 0.0});
  const AdaptedFrame fr = adapted_frame(ps);
  REQUIRE(fr.n() == 3);
  // e_n = beta#/K = d1; the orthogonal block picks up d2, d3 in index order
  CHECK(fr.e[2][0] == doctest::Approx(1.0));
  CHECK(fr.e[2][1] == doctest::Approx(0.0));
  CHECK(fr.e[0][1] == doctest::Approx(1.0));
  CHECK(fr.e[1][2] == doctest::Approx(1.0));

  const RunConfig warped = example("warped-2d");
  const PointState wps = point_state(warped.spec(), Vec{0.0, 0.0});
  const AdaptedFrame wfr = adapted_frame(wps);
  CHECK(wfr.e[1][0] == doctest::Approx(1.0));  // e_n = (1, 0)
  CHECK(wfr.e[0][1] == doctest::Approx(1.0));  // e_1 = (0, 1): g is identity at origin

  // defining property at random points: Gram matrix = identity, beta(e_a) = 0
  SplitMix64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const Vec q = random_point(warped.spec().domain(), rng);
    const PointState psq = point_state(warped.spec(), q);
    const AdaptedFrame frq = adapted_frame(psq);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(psq.alpha(frq.e[static_cast<size_t>(i)], frq.e[static_cast<size_t>(j)]) ==
              doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
    CHECK(psq.beta_of(frq.e[0]) == doctest::Approx(0.0).epsilon(1e-10));
  }
}

TEST_CASE("tensor norm: orthonormal coordinates and basis independence") {
  const RunConfig cfg = example("flat-const");
  const PointState ps = point_state(cfg.spec(), Vec{0.0, 0.0, 0.0});

  Tensor12 zero(3, Basis::kChart);
  CHECK(tensor12_norm_sq(ps, zero) == doctest::Approx(0.0));

  Tensor12 single(3, Basis::kChart);
  single.at(1, 2, 0) = 1.0;  // T^1_23
  CHECK(tensor12_norm_sq(ps, single) == doctest::Approx(1.0));

  // |T_circ|^2 = 4 at the helical origin (hand computation, oracle-confirmed)
  const RunConfig helical = example("helical");
  const PointState hps = point_state(helical.spec(), Vec{0.0, 0.0, 0.0});
  CHECK(tensor12_norm_sq(hps, torsion_circ(hps)) == doctest::Approx(4.0).epsilon(1e-12));

  // chart-component norm equals the frame-component sum of squares
  const RunConfig warped = example("warped-2d");
  SplitMix64 rng(23);
  for (int rep = 0; rep < 20; ++rep) {
    const Vec q = random_point(warped.spec().domain(), rng);
    const PointState psq = point_state(warped.spec(), q);
    Tensor12 t(2, Basis::kChart);
    for (auto& v : t.c) v = rng.uniform(-1.0, 1.0);
    const Tensor12 ft = to_frame(psq, t, adapted_frame(psq));
    double frame_sum = 0.0;
    for (double v : ft.c) frame_sum += v * v;
    CHECK(tensor12_norm_sq(psq, t) ==
          doctest::Approx(frame_sum).epsilon(1e-10));
  }
}

TEST_CASE("metric compatibility and Leibniz identities") {
  const RunConfig cfg = example("warped-2d");
  SplitMix64 rng(31);
  for (int rep = 0; rep < 10; ++rep) {
    const Vec q = random_point(cfg.spec().domain(), rng);
    const PointState ps = point_state(cfg.spec(), q);
    const FieldEval fe = evaluate_field(cfg.spec(), q);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          double rhs = 0.0;
          for (int l = 0; l < 2; ++l)
            rhs += ps.g(l, k) * ps.gamma(l, i, j) + ps.g(j, l) * ps.gamma(l, i, k);
          CHECK(fe.dg[static_cast<size_t>(i)](j, k) == doctest::Approx(rhs).epsilon(1e-8));
        }
    const SharpDerivatives sd = sharp_derivatives(fe);
    for (int i = 0; i < 2; ++i) {
      double pair = 0.0;
      for (int j = 0; j < 2; ++j) pair += 2.0 * ps.nabla_beta(i, j) * ps.beta_sharp[static_cast<size_t>(j)];
      CHECK(sd.d_k2[static_cast<size_t>(i)] == doctest::Approx(pair).epsilon(1e-8));
    }
  }
}

TEST_CASE("failure modes: non-SPD metric and out-of-domain points") {
  const std::string bad = R"({
    "dimension": 2,
    "metric": [["1", "0"], ["0", "x1"]],
    "beta": ["0.1", "0"],
    "domain": {"min": [-1, -1], "max": [1, 1]}
  })";
  const RunConfig cfg = RunConfig::from_json_text(bad);
  CHECK_THROWS_AS(point_state(cfg.spec(), Vec{-0.5, 0.0}), NumericalError);
  CHECK_NOTHROW(point_state(cfg.spec(), Vec{0.5, 0.0}));
  CHECK_THROWS_AS(point_state(cfg.spec(), Vec{2.0, 0.0}), ConfigError);
}
