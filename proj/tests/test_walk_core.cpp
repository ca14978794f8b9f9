#include <cmath>
#include <numbers>

#include "cyclewalk/initial_states.hpp"
#include "cyclewalk/spectral.hpp"
#include "cyclewalk/walk.hpp"
#include "dense_oracle.hpp"
#include "doctest.h"

using namespace cyclewalk;
namespace ct = cyclewalk::testing;

namespace {
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

WalkState basis_state(CycleParams params, int s, int v) {
  WalkState state(params);
  state.amp(s, v) = 1.0;
  return state;
}
}  // namespace

TEST_CASE("cycle params validation") {
  CHECK_NOTHROW(CycleParams(4));
  CHECK_NOTHROW(CycleParams(50));
  CHECK_THROWS_AS(CycleParams(5), std::invalid_argument);
  CHECK_THROWS_AS(CycleParams(2), std::invalid_argument);
  CHECK_THROWS_AS(CycleParams(-8), std::invalid_argument);
}

TEST_CASE("coin acts as Hadamard on each node") {
  const CycleParams params(8);
  const WalkState from0 = apply_coin(basis_state(params, 0, 3));
  CHECK(std::abs(from0.amp(0, 3) - kInvSqrt2) < 1e-15);
  CHECK(std::abs(from0.amp(1, 3) - kInvSqrt2) < 1e-15);

  const WalkState from1 = apply_coin(basis_state(params, 1, 3));
  CHECK(std::abs(from1.amp(0, 3) - kInvSqrt2) < 1e-15);
  CHECK(std::abs(from1.amp(1, 3) + kInvSqrt2) < 1e-15);

  // (|0,v> + |1,v>)/sqrt2 -> |0,v>
  WalkState plus(params);
  plus.amp(0, 5) = kInvSqrt2;
  plus.amp(1, 5) = kInvSqrt2;
  const WalkState back = apply_coin(plus);
  CHECK(std::abs(back.amp(0, 5) - 1.0) < 1e-15);
  CHECK(std::abs(back.amp(1, 5)) < 1e-15);
}

TEST_CASE("coin is an involution") {
  const WalkState in = ct::random_state(CycleParams(12), 7);
  CHECK(ct::max_amp_diff(apply_coin(apply_coin(in)), in) < 1e-14);
}

TEST_CASE("shift moves coin-0 down and coin-1 up with wraparound") {
  const CycleParams params(6);
  const WalkState down = apply_shift(basis_state(params, 0, 4));
  CHECK(down.amp(0, 3) == Complex(1.0));

  const WalkState wrap = apply_shift(basis_state(params, 1, 5));
  CHECK(wrap.amp(1, 0) == Complex(1.0));

  WalkState both(params);  // (|0,2> + |1,2>)/sqrt2 -> (|0,1> + |1,3>)/sqrt2
  both.amp(0, 2) = kInvSqrt2;
  both.amp(1, 2) = kInvSqrt2;
  const WalkState out = apply_shift(both);
  CHECK(std::abs(out.amp(0, 1) - kInvSqrt2) < 1e-15);
  CHECK(std::abs(out.amp(1, 3) - kInvSqrt2) < 1e-15);
  CHECK(std::abs(out.amp(0, 2)) == 0.0);
}

TEST_CASE("step composes coin then shift") {
  const CycleParams params(10);
  const int v0 = 0;
  const WalkState out = step(basis_state(params, 0, v0));
  CHECK(std::abs(out.amp(0, 9) - kInvSqrt2) < 1e-15);  // v0 - 1 mod d
  CHECK(std::abs(out.amp(1, 1) - kInvSqrt2) < 1e-15);  // v0 + 1

  const WalkState in = ct::random_state(params, 11);
  CHECK(ct::max_amp_diff(step(in), apply_shift(apply_coin(in))) < 1e-15);
}

TEST_CASE("step fixes the uniform eigenvector") {
  const CycleParams params(12);
  const WalkState phi = eigenvector(0, 0, params);
  CHECK(ct::max_amp_diff(step(phi), phi) < 1e-14);
}

TEST_CASE("step preserves the norm") {
  WalkState state = ct::random_state(CycleParams(24), 13);
  for (int t = 0; t < 200; ++t) step_in_place(state);
  CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("step agrees with the dense matrix oracle") {
  for (int d : {4, 6, 8, 12, 24}) {
    const CycleParams params(d);
    const auto u = ct::dense_walk_operator(params);
    WalkState in = ct::random_state(params, 100u + d);
    for (int t = 0; t < 5; ++t) {
      const WalkState expected = ct::apply_dense(u, in);
      in = step(in);
      CHECK(ct::max_amp_diff(in, expected) < 1e-13);
    }
  }
}

TEST_CASE("node distribution traces out the coin") {
  const CycleParams params(8);
  const Distribution point = node_distribution(basis_state(params, 0, 3));
  CHECK(point.p[3] == doctest::Approx(1.0));

  WalkState mixed(params);  // (|0,1> + i|1,1>)/sqrt2
  mixed.amp(0, 1) = kInvSqrt2;
  mixed.amp(1, 1) = Complex(0.0, kInvSqrt2);
  CHECK(node_distribution(mixed).p[1] == doctest::Approx(1.0));

  WalkState split(params);  // (|0,0> + |1,2>)/sqrt2
  split.amp(0, 0) = kInvSqrt2;
  split.amp(1, 2) = kInvSqrt2;
  const Distribution p = node_distribution(split);
  CHECK(p.p[0] == doctest::Approx(0.5));
  CHECK(p.p[2] == doctest::Approx(0.5));
}

TEST_CASE("tvd of uniform and point-mass distributions") {
  const CycleParams params(24);
  CHECK(tvd(uniform_distribution(params)) == 0.0);
  CHECK(tvd(node_distribution(basis_state(params, 0, 7))) ==
        doctest::Approx(23.0 / 24.0).epsilon(1e-14));
}

TEST_CASE("evolve_averaged from a point mass starts at 1 - 1/d") {
  const CycleParams params(24);
  const AveragedRun run = evolve_averaged(make_single_node(params, 0), 0);
  REQUIRE(run.deltas.size() == 1);
  CHECK(run.deltas[0].delta == doctest::Approx(23.0 / 24.0).epsilon(1e-14));
}

TEST_CASE("evolve_averaged of a pair state is frozen at 0.204") {
  const CycleParams params(24);
  const AveragedRun run = evolve_averaged(make_pair(params, 3, 0, PairBranch::Lower), 300);
  for (const TvdPoint& p : run.deltas) CHECK(p.delta == doctest::Approx(run.deltas[0].delta).epsilon(1e-13));
  // telescoped closed form at m=3, d=24: (m/d) sqrt(2/3) * 2 = 0.204124...
  CHECK(run.deltas.back().delta == doctest::Approx(0.25 * std::sqrt(2.0 / 3.0)).epsilon(1e-12));
  CHECK(std::round(run.deltas.back().delta * 1000.0) / 1000.0 == doctest::Approx(0.204));
}

TEST_CASE("evolve_averaged of the uniform eigenvector stays at zero") {
  const CycleParams params(24);
  const AveragedRun run = evolve_averaged(eigenvector(0, 0, params), 100);
  for (const TvdPoint& p : run.deltas) CHECK(p.delta < 1e-13);
}

TEST_CASE("tvd series is ordered and bounded") {
  const CycleParams params(12);
  const AveragedRun run = evolve_averaged(make_single_node(params, 5), 400);
  for (std::size_t i = 0; i < run.deltas.size(); ++i) {
    CHECK(run.deltas[i].t == static_cast<long>(i));
    CHECK(run.deltas[i].delta >= 0.0);
    CHECK(run.deltas[i].delta <= 1.0 - 1.0 / params.d + 1e-14);
  }
}

TEST_CASE("parity confinement is exact for single-node starts") {
  const CycleParams params(10);
  const int v0 = 3;
  WalkState state = make_single_node(params, v0);
  for (int t = 0; t <= 40; ++t) {
    const Distribution p = node_distribution(state);
    for (int v = 0; v < params.d; ++v)
      if ((v - v0 - t) % 2 != 0) CHECK(p.p[v] == 0.0);
    step_in_place(state);
  }
}

TEST_CASE("time_averaged_distribution matches the full run") {
  const CycleParams params(16);
  const WalkState state0 = make_single_node(params, 2);
  const AveragedRun run = evolve_averaged(state0, 257);
  const Distribution last = time_averaged_distribution(state0, 257);
  for (int v = 0; v < params.d; ++v)
    CHECK(last.p[v] == doctest::Approx(run.averaged.back().p[v]).epsilon(1e-14));
}
