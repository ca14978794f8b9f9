#pragma once

#include "cyclewalk/walk.hpp"

namespace cyclewalk {

/// Decay base of the single-node limiting distribution, z = 3 - 2 sqrt(2).
double decay_base();

/// 1 when d/2 is even, 0 when d/2 is odd; selects the sign and the asymptotic
/// branch of the single-node formulas.
int parity_indicator(CycleParams params);

/// eta = floor(d/(4m) - 1/2), the index at which the pair-state TVD sum
/// telescopes when m divides d/2.
int fold_count(CycleParams params, int m);

/// Closed-form limiting distribution for a walk started at a single node:
/// pi(v) = (1 + f(s) - (-1)^xi f(s')) / d with s the cycle distance to v0,
/// s' = d/2 - s, and f(x) = sqrt2/(1 - (-z)^(d/2)) z^x - [x == 0] - 1/d.
/// The result is validated against normalization; a sum off by more than
/// 1e-10 throws std::runtime_error reporting the deviation.
Distribution limiting_single_node(CycleParams params, int v0);

/// Large-d limit of tvd(limiting_single_node): 1/d when d/2 is odd, else
/// 2/d - 4/d^2 (1 - 2 (log2 d - 1/2)/log2 z). Requires d >= 8.
double tvd_limit_single_node_asymptotic(CycleParams params);

/// Limiting distribution of the two-eigenvector (pair) states:
/// pi(v) = 1/d - (-1)^v sin(alpha) sin(alpha (2v - 1)) / (d sqrt(1 + cos^2 alpha))
/// with alpha = 2 pi m / d. Equals the frozen p_0 of make_pair pointwise.
Distribution limiting_pair(CycleParams params, int m);

/// TVD of the pair-state limiting distribution, evaluated as the direct sum
/// over nodes. When m divides d/2 the telescoped closed form
/// (m/d)(1 - cos(2 alpha (eta + 1))) / sqrt(1 + cos^2 alpha) is also
/// evaluated and a disagreement beyond 1e-12 throws std::runtime_error.
double tvd_pair(CycleParams params, int m);

/// Closed-form time-averaged distribution of the quad state at time t:
/// pbar_t(v) = A(v) + B(v) sin(2 phi (t+1)) / (t+1) with A = limiting_pair,
/// B = (p_0 - A)/sin(2 phi), phi the phase of c_mk and p_0 taken from the
/// constructed state. Throws on vanishing sin(2 phi).
Distribution averaged_quad(CycleParams params, int m, int k, long t);

}  // namespace cyclewalk
