#include "cyclewalk/spectral.hpp"

#include <cmath>
#include <numbers>

namespace cyclewalk {

namespace {

constexpr double kPi = std::numbers::pi;

void check_index(int j, int k, CycleParams params) {
  if (j < 0 || j >= params.d || (k != 0 && k != 1))
    throw std::out_of_range("eigenpair index (j=" + std::to_string(j) +
                            ", k=" + std::to_string(k) + ") out of range for d=" +
                            std::to_string(params.d));
}

EigenPair make_pair(int j, int k, CycleParams params) {
  const double theta = 2.0 * kPi * j / params.d;
  const double root = std::sqrt(1.0 + std::cos(theta) * std::cos(theta));
  const double sign = k == 0 ? 1.0 : -1.0;
  const Complex c = Complex(sign * root, -std::sin(theta)) / std::numbers::sqrt2;
  const Complex b = std::polar(1.0, theta) * (sign * root - std::cos(theta));
  const double a = 1.0 / std::sqrt(params.d * (1.0 + std::norm(b)));
  return {j, k, c, a, b, std::arg(c)};
}

}  // namespace

Complex eigenvalue(int j, int k, CycleParams params) {
  check_index(j, k, params);
  return make_pair(j, k, params).c;
}

WalkState eigenvector(int j, int k, CycleParams params) {
  check_index(j, k, params);
  const EigenPair e = make_pair(j, k, params);
  WalkState state(params);
  for (int v = 0; v < params.d; ++v) {
    // The position phases run with w^(-jv); the printed w^(+jv) does not
    // satisfy U phi = c phi under the shift convention of the step operator.
    const Complex w = std::polar(1.0, -2.0 * kPi * j * v / params.d);
    state.amp(0, v) = e.a * w;
    state.amp(1, v) = e.a * e.b * w;
  }
  return state;
}

SpectralBasis::SpectralBasis(CycleParams params) : params_(params) {
  const int d = params.d;
  pairs_.reserve(2 * d);
  for (int k = 0; k < 2; ++k)
    for (int j = 0; j < d; ++j) pairs_.push_back(make_pair(j, k, params));

  // Exact index arithmetic gives the degeneracy partition: c depends on j
  // only through sin(theta) and cos^2(theta), so c_jk = c_j'k iff
  // j' = (d/2 - j) mod d. The two coin branches have real parts of opposite
  // nonzero sign and never collide. Floating-point agreement is cross-checked.
  std::vector<bool> seen(2 * d, false);
  for (int k = 0; k < 2; ++k) {
    for (int j = 0; j < d; ++j) {
      const int idx = flat_index(j, k, params);
      if (seen[idx]) continue;
      const int partner = ((d / 2 - j) % d + d) % d;
      std::vector<int> group{idx};
      seen[idx] = true;
      if (partner != j) {
        const int pidx = flat_index(partner, k, params);
        if (std::abs(pairs_[idx].c - pairs_[pidx].c) > 1e-10)
          throw std::logic_error("degenerate partners disagree on eigenvalue");
        group.push_back(pidx);
        seen[pidx] = true;
      }
      classes_.push_back(std::move(group));
    }
  }
}

const EigenPair& SpectralBasis::pair(int j, int k) const {
  check_index(j, k, params_);
  return pairs_[flat_index(j, k, params_)];
}

std::vector<Complex> decompose(const WalkState& state, const SpectralBasis& basis) {
  if (!(state.params() == basis.params()))
    throw std::invalid_argument("state and basis cycle sizes differ");
  const int d = basis.params().d;
  std::vector<Complex> coefs(2 * d);
  for (int k = 0; k < 2; ++k) {
    for (int j = 0; j < d; ++j) {
      const WalkState phi = eigenvector(j, k, basis.params());
      Complex c = 0.0;
      for (int s = 0; s < 2; ++s)
        for (int v = 0; v < d; ++v) c += std::conj(phi.amp(s, v)) * state.amp(s, v);
      coefs[SpectralBasis::flat_index(j, k, basis.params())] = c;
    }
  }
  return coefs;
}

WalkState reconstruct(const std::vector<Complex>& coefs, const SpectralBasis& basis) {
  const int d = basis.params().d;
  if (coefs.size() != static_cast<std::size_t>(2 * d))
    throw std::invalid_argument("coefficient vector has wrong length");
  WalkState state(basis.params());
  for (int k = 0; k < 2; ++k) {
    for (int j = 0; j < d; ++j) {
      const Complex c = coefs[SpectralBasis::flat_index(j, k, basis.params())];
      if (c == Complex{}) continue;
      const WalkState phi = eigenvector(j, k, basis.params());
      for (int s = 0; s < 2; ++s)
        for (int v = 0; v < d; ++v) state.amp(s, v) += c * phi.amp(s, v);
    }
  }
  return state;
}

const std::vector<std::vector<int>>& degenerate_classes(const SpectralBasis& basis) {
  return basis.classes();
}

Distribution limiting_distribution(const WalkState& state0, const SpectralBasis& basis) {
  const int d = basis.params().d;
  const std::vector<Complex> coefs = decompose(state0, basis);
  Distribution pi{basis.params(), std::vector<double>(d, 0.0)};
  WalkState proj(basis.params());
  for (const std::vector<int>& group : basis.classes()) {
    for (Complex& a : proj.amplitudes()) a = 0.0;
    for (int idx : group) {
      const EigenPair& e = basis.pairs()[idx];
      const Complex c = coefs[idx];
      if (c == Complex{}) continue;
      const WalkState phi = eigenvector(e.j, e.k, basis.params());
      for (int s = 0; s < 2; ++s)
        for (int v = 0; v < d; ++v) proj.amp(s, v) += c * phi.amp(s, v);
    }
    for (int v = 0; v < d; ++v)
      pi.p[v] += std::norm(proj.amp(0, v)) + std::norm(proj.amp(1, v));
  }
  return pi;
}

}  // namespace cyclewalk
