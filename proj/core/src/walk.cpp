#include "cyclewalk/walk.hpp"

#include <cmath>
#include <numbers>

namespace cyclewalk {

namespace {
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
}

double WalkState::norm() const {
  double sum = 0.0;
  for (const Complex& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

WalkState apply_coin(const WalkState& state) {
  WalkState out = state;
  const int d = state.d();
  for (int v = 0; v < d; ++v) {
    const Complex g0 = state.amp(0, v);
    const Complex g1 = state.amp(1, v);
    out.amp(0, v) = (g0 + g1) * kInvSqrt2;
    out.amp(1, v) = (g0 - g1) * kInvSqrt2;
  }
  return out;
}

WalkState apply_shift(const WalkState& state) {
  const int d = state.d();
  WalkState out(state.params());
  for (int v = 0; v < d; ++v) {
    out.amp(0, (v + d - 1) % d) = state.amp(0, v);
    out.amp(1, (v + 1) % d) = state.amp(1, v);
  }
  return out;
}

WalkState step(const WalkState& state) {
  WalkState out = state;
  step_in_place(out);
  return out;
}

void step_in_place(WalkState& state) {
  const int d = state.d();
  // Fused coin + shift. Destination (0, v) receives the coin-0 output of node
  // v+1; destination (1, v) the coin-1 output of node v-1.
  const Complex first0 = state.amp(0, 0);
  const Complex first1 = state.amp(1, 0);
  Complex carry0 = state.amp(0, d - 1);  // coin inputs of node v-1, start at v=0
  Complex carry1 = state.amp(1, d - 1);
  for (int v = 0; v < d; ++v) {
    const int vn = v + 1 == d ? 0 : v + 1;
    const Complex n0 = vn == 0 ? first0 : state.amp(0, vn);
    const Complex n1 = vn == 0 ? first1 : state.amp(1, vn);
    const Complex c0 = state.amp(0, v);
    const Complex c1 = state.amp(1, v);
    state.amp(0, v) = (n0 + n1) * kInvSqrt2;
    state.amp(1, v) = (carry0 - carry1) * kInvSqrt2;
    carry0 = c0;
    carry1 = c1;
  }
}

Distribution node_distribution(const WalkState& state) {
  const int d = state.d();
  Distribution dist{state.params(), std::vector<double>(d)};
  for (int v = 0; v < d; ++v) {
    double p = std::norm(state.amp(0, v)) + std::norm(state.amp(1, v));
    if (p < 0.0) p = 0.0;  // rounding guard; |.|^2 cannot go below -1e-14
    dist.p[v] = p;
  }
  return dist;
}

Distribution uniform_distribution(CycleParams params) {
  return {params, std::vector<double>(params.d, 1.0 / params.d)};
}

double tvd(const Distribution& dist) {
  const double u = 1.0 / dist.params.d;
  double sum = 0.0;
  for (double p : dist.p) {
    const double q = p < 0.0 ? 0.0 : p;
    sum += std::abs(q - u);
  }
  return 0.5 * sum;
}

namespace {

// Stable running-mean update, shared by both averaging entry points.
void accumulate_mean(std::vector<double>& mean, const Distribution& pt, long t) {
  for (std::size_t v = 0; v < mean.size(); ++v)
    mean[v] += (pt.p[v] - mean[v]) / static_cast<double>(t + 1);
}

}  // namespace

AveragedRun evolve_averaged(const WalkState& state0, long t_max) {
  if (t_max < 0) throw std::invalid_argument("t_max must be nonnegative");
  AveragedRun run;
  run.averaged.reserve(t_max + 1);
  run.deltas.reserve(t_max + 1);

  WalkState state = state0;
  Distribution mean = node_distribution(state);
  run.averaged.push_back(mean);
  run.deltas.push_back({0, tvd(mean)});
  for (long t = 1; t <= t_max; ++t) {
    step_in_place(state);
    accumulate_mean(mean.p, node_distribution(state), t);
    run.averaged.push_back(mean);
    run.deltas.push_back({t, tvd(mean)});
  }
  return run;
}

Distribution time_averaged_distribution(const WalkState& state0, long t_max) {
  if (t_max < 0) throw std::invalid_argument("t_max must be nonnegative");
  WalkState state = state0;
  Distribution mean = node_distribution(state);
  for (long t = 1; t <= t_max; ++t) {
    step_in_place(state);
    accumulate_mean(mean.p, node_distribution(state), t);
  }
  return mean;
}

}  // namespace cyclewalk
