#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace cyclewalk {

using Complex = std::complex<double>;

/// Cycle size and validation. The walk is defined on even cycles only.
struct CycleParams {
  int d;

  explicit CycleParams(int nodes) : d(nodes) {
    if (d < 4 || d % 2 != 0)
      throw std::invalid_argument("cycle size must be even and >= 4, got " +
                                  std::to_string(nodes));
  }

  friend bool operator==(CycleParams a, CycleParams b) { return a.d == b.d; }
};

/// State vector of the coined walk: 2d complex amplitudes gamma(s,v) over
/// coin s in {0,1} and node v in {0..d-1}, stored as [s*d + v].
class WalkState {
 public:
  explicit WalkState(CycleParams params)
      : params_(params), amps_(2 * static_cast<std::size_t>(params.d)) {}

  CycleParams params() const { return params_; }
  int d() const { return params_.d; }

  Complex& amp(int s, int v) { return amps_[static_cast<std::size_t>(s) * d() + v]; }
  const Complex& amp(int s, int v) const {
    return amps_[static_cast<std::size_t>(s) * d() + v];
  }

  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }

  double norm() const;

 private:
  CycleParams params_;
  std::vector<Complex> amps_;
};

/// d probabilities over the nodes; sums to 1 for any valid walk state.
struct Distribution {
  CycleParams params;
  std::vector<double> p;
};

struct TvdPoint {
  long t;
  double delta;
};
using TvdSeries = std::vector<TvdPoint>;

/// Hadamard coin on every node: (g0, g1) -> ((g0+g1)/sqrt2, (g0-g1)/sqrt2).
WalkState apply_coin(const WalkState& state);

/// Coin-conditioned shift: amplitude at (s, v) moves to (s, v + 2s - 1 mod d).
WalkState apply_shift(const WalkState& state);

/// One step of the walk, U = S (H x I): coin then shift.
WalkState step(const WalkState& state);

/// In-place step; the trajectory loop primitive.
void step_in_place(WalkState& state);

/// p(v) = |gamma(0,v)|^2 + |gamma(1,v)|^2, clamped at -1e-14 and floored to 0.
Distribution node_distribution(const WalkState& state);

Distribution uniform_distribution(CycleParams params);

/// Total variation distance to uniform: (1/2) sum_v |p(v) - 1/d|.
double tvd(const Distribution& dist);

struct AveragedRun {
  std::vector<Distribution> averaged;  // running Cesaro mean p̄_t for t = 0..t_max
  TvdSeries deltas;                    // Δ_t of each p̄_t
};

/// Iterates the walk from state0 and returns the time-averaged distributions
/// p̄_t = mean(p_0..p_t) with their TVD series, for every t <= t_max.
AveragedRun evolve_averaged(const WalkState& state0, long t_max);

/// Final Cesaro mean only; O(d) memory regardless of t_max.
Distribution time_averaged_distribution(const WalkState& state0, long t_max);

}  // namespace cyclewalk
