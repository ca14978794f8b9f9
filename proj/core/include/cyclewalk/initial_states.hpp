#pragma once

#include <string>
#include <variant>

#include "cyclewalk/walk.hpp"

namespace cyclewalk {

enum class PairBranch { Lower, Upper };

struct SingleNodeSpec {
  int v0;
};

struct PairSpec {
  int m;
  int k;
  PairBranch branch = PairBranch::Lower;
};

struct QuadSpec {
  int m;
  int k;
};

using InitialStateSpec = std::variant<SingleNodeSpec, PairSpec, QuadSpec>;

/// Largest m for which the pair/quad constructions are valid: floor((d-2)/4).
int max_pair_index(CycleParams params);

/// The coin-symmetric localized state ((|0> + i|1>)/sqrt2) (x) |v0>. Its
/// spectral coefficients are a_jk (1 + i conj(b_jk)) / sqrt2 up to a
/// v0-dependent phase, which is what singles out this coin part.
WalkState make_single_node(CycleParams params, int v0);

/// Equal-weight superposition of two degenerate eigenvectors:
/// Lower branch (phi_{m,k} + phi_{d/2-m,k})/sqrt2 for 0 <= m <= m_max,
/// Upper branch (phi_{d/2+m,k} + phi_{d-m,k})/sqrt2 for 1 <= m <= m_max.
WalkState make_pair(CycleParams params, int m, int k, PairBranch branch);

/// The signed four-eigenvector state
/// (phi_{m,k} + phi_{d/2-m,k} - phi_{d/2+m,k} - phi_{d-m,k})/2,
/// spanning two conjugate eigenvalue classes. Valid for 1 <= m <= m_max.
WalkState make_quad(CycleParams params, int m, int k);

WalkState make_initial_state(CycleParams params, const InitialStateSpec& spec);

/// Parses the CLI syntax "single:<v0>", "pair:<m>,<k>[,upper]", "quad:<m>,<k>".
/// Throws std::invalid_argument on malformed input.
InitialStateSpec parse_initial_spec(const std::string& text);

std::string format_initial_spec(const InitialStateSpec& spec);

}  // namespace cyclewalk
