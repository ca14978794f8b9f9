#include <cmath>
#include <numbers>

#include "cyclewalk/analytic.hpp"
#include "cyclewalk/initial_states.hpp"
#include "cyclewalk/spectral.hpp"
#include "doctest.h"

using namespace cyclewalk;

TEST_CASE("closed-form constants") {
  CHECK(decay_base() == doctest::Approx(3.0 - 2.0 * std::numbers::sqrt2).epsilon(1e-16));
  CHECK(decay_base() > 0.0);
  CHECK(decay_base() < 1.0);
  CHECK(parity_indicator(CycleParams(24)) == 1);  // d/2 = 12 even
  CHECK(parity_indicator(CycleParams(26)) == 0);  // d/2 = 13 odd
  CHECK(fold_count(CycleParams(24), 3) == 1);     // floor(2 - 1/2)
}

TEST_CASE("single-node limiting distribution is symmetric about v0") {
  const CycleParams params(24);
  const int v0 = 9;
  const Distribution pi = limiting_single_node(params, v0);
  for (int w = 1; w < params.d / 2; ++w)
    CHECK(pi.p[(v0 + w) % params.d] ==
          doctest::Approx(pi.p[(v0 - w + params.d) % params.d]).epsilon(1e-14));
  double sum = 0.0;
  for (double p : pi.p) sum += p;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("single-node limiting distribution matches the spectral oracle") {
  for (int d : {8, 12, 16, 24, 32}) {
    const CycleParams params(d);
    const SpectralBasis basis(params);
    const Distribution oracle = limiting_distribution(make_single_node(params, 0), basis);
    const Distribution closed = limiting_single_node(params, 0);
    for (int v = 0; v < d; ++v) CHECK(std::abs(closed.p[v] - oracle.p[v]) < 1e-9);
  }
}

TEST_CASE("single-node TVD at d=24 reproduces 0.054") {
  const Distribution pi = limiting_single_node(CycleParams(24), 0);
  CHECK(std::abs(tvd(pi) - 0.054) < 1e-3);
}

TEST_CASE("asymptotic TVD limit") {
  CHECK(tvd_limit_single_node_asymptotic(CycleParams(26)) == 1.0 / 26.0);  // d/2 odd branch
  const double at24 = tvd_limit_single_node_asymptotic(CycleParams(24));
  CHECK(std::abs(at24 - 0.054) < 1e-3);
  CHECK(std::abs(at24 - tvd(limiting_single_node(CycleParams(24), 0))) < 5e-3);
  CHECK_THROWS_AS(tvd_limit_single_node_asymptotic(CycleParams(6)), std::invalid_argument);
}

TEST_CASE("pair limiting distribution") {
  const CycleParams params(24);

  SUBCASE("m = 0 is uniform") {
    const Distribution pi = limiting_pair(params, 0);
    for (double p : pi.p) CHECK(p == doctest::Approx(1.0 / 24.0).epsilon(1e-15));
    CHECK(tvd_pair(params, 0) == 0.0);
  }

  SUBCASE("matches the frozen p_0 of the pair state pointwise") {
    for (int m = 0; m <= max_pair_index(params); ++m) {
      const Distribution closed = limiting_pair(params, m);
      const Distribution p0 = node_distribution(make_pair(params, m, 0, PairBranch::Lower));
      for (int v = 0; v < params.d; ++v) CHECK(std::abs(closed.p[v] - p0.p[v]) < 1e-12);
    }
  }

  SUBCASE("normalizes for every valid m") {
    for (int d : {8, 12, 24, 32}) {
      const CycleParams p(d);
      for (int m = 0; m <= max_pair_index(p); ++m) {
        double sum = 0.0;
        for (double x : limiting_pair(p, m).p) sum += x;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }

  SUBCASE("rejects m out of range") {
    CHECK_THROWS_AS(limiting_pair(params, 6), std::out_of_range);
    CHECK_THROWS_AS(limiting_pair(params, -1), std::out_of_range);
  }
}

TEST_CASE("pair TVD reproduces 0.204 and matches its own distribution") {
  const CycleParams params(24);
  const double delta = tvd_pair(params, 3);
  CHECK(std::round(delta * 1000.0) / 1000.0 == doctest::Approx(0.204));
  CHECK(std::abs(delta - tvd(limiting_pair(params, 3))) < 1e-12);
}

TEST_CASE("pair TVD telescoped form agrees across the divisor grid") {
  for (int d = 4; d <= 64; d += 2) {
    const CycleParams params(d);
    for (int m = 1; m <= max_pair_index(params); ++m)
      if ((d / 2) % m == 0) CHECK_NOTHROW(tvd_pair(params, m));
  }
}

TEST_CASE("quad averaged distribution") {
  const CycleParams params(24);
  const int m = 3, k = 0;

  SUBCASE("t = 0 returns p_0 exactly") {
    const Distribution p0 = node_distribution(make_quad(params, m, k));
    const Distribution law = averaged_quad(params, m, k, 0);
    for (int v = 0; v < params.d; ++v)
      CHECK(law.p[v] == doctest::Approx(p0.p[v]).epsilon(1e-14));
  }

  SUBCASE("large t approaches the pair limiting distribution") {
    const Distribution pi = limiting_pair(params, m);
    const Distribution law = averaged_quad(params, m, k, 100000000);
    for (int v = 0; v < params.d; ++v) CHECK(std::abs(law.p[v] - pi.p[v]) < 1e-8);
  }

  SUBCASE("the oscillation phase comes from c_mk: phi = -pi/6 at m=3, d=24") {
    const double phase = std::arg(eigenvalue(m, k, params));
    CHECK(phase == doctest::Approx(-std::numbers::pi / 6.0).epsilon(1e-14));
    CHECK(std::sin(2.0 * phase) == doctest::Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-14));
  }

  SUBCASE("matches the simulated Cesaro mean pointwise") {
    const AveragedRun run = evolve_averaged(make_quad(params, m, k), 1000);
    for (long t = 0; t <= 1000; t += 7) {
      const Distribution law = averaged_quad(params, m, k, t);
      for (int v = 0; v < params.d; ++v)
        CHECK(std::abs(law.p[v] - run.averaged[t].p[v]) < 1e-9);
    }
  }

  SUBCASE("rejects invalid parameters") {
    CHECK_THROWS_AS(averaged_quad(params, 0, 0, 10), std::out_of_range);
    CHECK_THROWS_AS(averaged_quad(params, m, k, -1), std::invalid_argument);
  }
}
