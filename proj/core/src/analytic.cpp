#include "cyclewalk/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cyclewalk/initial_states.hpp"
#include "cyclewalk/spectral.hpp"

namespace cyclewalk {

namespace {
constexpr double kPi = std::numbers::pi;
}

double decay_base() { return 3.0 - 2.0 * std::numbers::sqrt2; }

int parity_indicator(CycleParams params) { return (params.d / 2) % 2 == 0 ? 1 : 0; }

int fold_count(CycleParams params, int m) {
  if (m < 1) throw std::out_of_range("fold count needs m >= 1");
  return static_cast<int>(std::floor(params.d / (4.0 * m) - 0.5));
}

Distribution limiting_single_node(CycleParams params, int v0) {
  const int d = params.d;
  if (v0 < 0 || v0 >= d)
    throw std::out_of_range("node index " + std::to_string(v0) + " out of range for d=" +
                            std::to_string(d));
  const double z = decay_base();
  const int xi = parity_indicator(params);
  // (-z)^(d/2): z^(d/2) with the sign of (-1)^(d/2).
  const double zhalf = std::pow(z, d / 2) * (xi == 1 ? 1.0 : -1.0);
  const double scale = std::numbers::sqrt2 / (1.0 - zhalf);
  const double sign = xi == 1 ? -1.0 : 1.0;  // (-1)^xi
  const auto f = [&](int x) {
    return scale * std::pow(z, x) - (x == 0 ? 1.0 : 0.0) - 1.0 / d;
  };

  Distribution pi{params, std::vector<double>(d)};
  double sum = 0.0;
  for (int v = 0; v < d; ++v) {
    const int dist = std::min(std::abs(v - v0), d - std::abs(v - v0));
    pi.p[v] = (1.0 + f(dist) - sign * f(d / 2 - dist)) / d;
    sum += pi.p[v];
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw std::runtime_error(
        "single-node limiting distribution violates normalization: sum deviates by " +
        std::to_string(sum - 1.0) + " (formula/oracle discrepancy)");
  return pi;
}

double tvd_limit_single_node_asymptotic(CycleParams params) {
  const double d = params.d;
  if (d < 8) throw std::invalid_argument("asymptotic TVD needs d >= 8");
  if (parity_indicator(params) == 0) return 1.0 / d;
  const double ratio = (std::log2(d) - 0.5) / std::log2(decay_base());
  return 2.0 / d - 4.0 / (d * d) * (1.0 - 2.0 * ratio);
}

Distribution limiting_pair(CycleParams params, int m) {
  const int d = params.d;
  if (m < 0 || m > max_pair_index(params))
    throw std::out_of_range("pair index m=" + std::to_string(m) + " outside [0, " +
                            std::to_string(max_pair_index(params)) + "] for d=" +
                            std::to_string(d));
  const double alpha = 2.0 * kPi * m / d;
  const double amp = std::sin(alpha) / (d * std::sqrt(1.0 + std::cos(alpha) * std::cos(alpha)));
  Distribution pi{params, std::vector<double>(d)};
  for (int v = 0; v < d; ++v) {
    const double sign = v % 2 == 0 ? 1.0 : -1.0;
    pi.p[v] = 1.0 / d - sign * amp * std::sin(alpha * (2 * v - 1));
  }
  return pi;
}

double tvd_pair(CycleParams params, int m) {
  const int d = params.d;
  if (m < 0 || m > max_pair_index(params))
    throw std::out_of_range("pair index m=" + std::to_string(m) + " out of range");
  if (m == 0) return 0.0;
  const double alpha = 2.0 * kPi * m / d;
  const double root = std::sqrt(1.0 + std::cos(alpha) * std::cos(alpha));
  double sum = 0.0;
  for (int v = 0; v < d; ++v) sum += std::abs(std::sin(alpha * (2 * v + 1)));
  const double delta = 0.5 * std::sin(alpha) / (d * root) * sum;

  if ((d / 2) % m == 0) {
    const double folded = static_cast<double>(m) / d / root *
                          (1.0 - std::cos(2.0 * alpha * (fold_count(params, m) + 1)));
    if (std::abs(folded - delta) > 1e-12)
      throw std::runtime_error("pair TVD: direct sum and telescoped form disagree by " +
                               std::to_string(folded - delta) +
                               " (formula transcription bug)");
  }
  return delta;
}

Distribution averaged_quad(CycleParams params, int m, int k, long t) {
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  if (m < 1 || m > max_pair_index(params))
    throw std::out_of_range("quad index m=" + std::to_string(m) + " outside [1, " +
                            std::to_string(max_pair_index(params)) + "]");
  const double phase = std::arg(eigenvalue(m, k, params));
  const double osc = std::sin(2.0 * phase);
  if (std::abs(osc) < 1e-12)
    throw std::runtime_error("degenerate parameters: sin(2 phi) vanishes for m=" +
                             std::to_string(m) + ", k=" + std::to_string(k));

  const Distribution pi = limiting_pair(params, m);
  const Distribution p0 = node_distribution(make_quad(params, m, k));
  const double damping = std::sin(2.0 * phase * (t + 1)) / (t + 1);
  Distribution pbar{params, std::vector<double>(params.d)};
  for (int v = 0; v < params.d; ++v)
    pbar.p[v] = pi.p[v] + (p0.p[v] - pi.p[v]) / osc * damping;
  return pbar;
}

}  // namespace cyclewalk
