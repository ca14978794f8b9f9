#pragma once

#include <vector>

#include "cyclewalk/walk.hpp"

namespace cyclewalk {

/// One closed-form eigenpair of the walk operator U, indexed by (j, k) with
/// j in [0, d) and a coin branch k in {0, 1}.
///
/// c is the unit-modulus eigenvalue, a the real normalization, b the coin
/// ratio (amplitude of |1> relative to |0>), and phase the principal argument
/// of c.
struct EigenPair {
  int j;
  int k;
  Complex c;
  double a;
  Complex b;
  double phase;
};

/// The full 2d eigensystem of U, plus its partition into classes of equal
/// eigenvalue. Immutable after construction; queries are read-only.
class SpectralBasis {
 public:
  explicit SpectralBasis(CycleParams params);

  CycleParams params() const { return params_; }

  const EigenPair& pair(int j, int k) const;
  const std::vector<EigenPair>& pairs() const { return pairs_; }

  /// Eigenvalue classes as lists of flat indices k*d + j. Per fixed k, a class
  /// is {j, (d/2 - j) mod d} or a singleton when the two coincide; classes
  /// never mix coin branches.
  const std::vector<std::vector<int>>& classes() const { return classes_; }

  static int flat_index(int j, int k, CycleParams params) { return k * params.d + j; }

 private:
  CycleParams params_;
  std::vector<EigenPair> pairs_;
  std::vector<std::vector<int>> classes_;
};

/// c_jk = ((-1)^k sqrt(1 + cos^2(2pi j/d)) - i sin(2pi j/d)) / sqrt(2).
Complex eigenvalue(int j, int k, CycleParams params);

/// Materializes the normalized eigenvector: gamma(0,v) = a_jk w^(-jv),
/// gamma(1,v) = a_jk b_jk w^(-jv) with w = e^(2pi i/d). O(d).
WalkState eigenvector(int j, int k, CycleParams params);

/// Inner products <phi_jk|state> for all 2d pairs, flat-indexed k*d + j.
std::vector<Complex> decompose(const WalkState& state, const SpectralBasis& basis);

/// Rebuilds sum_jk coef_jk phi_jk; inverse of decompose on coefficient vectors.
WalkState reconstruct(const std::vector<Complex>& coefs, const SpectralBasis& basis);

const std::vector<std::vector<int>>& degenerate_classes(const SpectralBasis& basis);

/// Limiting time-averaged distribution pi(v) by spectral projection: the
/// initial state is projected onto each eigenvalue class and the projected
/// node probabilities are summed over classes.
Distribution limiting_distribution(const WalkState& state0, const SpectralBasis& basis);

}  // namespace cyclewalk
