#include "cyclewalk/initial_states.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "cyclewalk/spectral.hpp"

namespace cyclewalk {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

void add_scaled(WalkState& acc, const WalkState& phi, double w) {
  for (int s = 0; s < 2; ++s)
    for (int v = 0; v < acc.d(); ++v) acc.amp(s, v) += w * phi.amp(s, v);
}

int parse_int(std::string_view text, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("bad " + what + " in initial-state spec: '" +
                                std::string(text) + "'");
  return value;
}

}  // namespace

int max_pair_index(CycleParams params) { return (params.d - 2) / 4; }

WalkState make_single_node(CycleParams params, int v0) {
  if (v0 < 0 || v0 >= params.d)
    throw std::out_of_range("node index " + std::to_string(v0) + " out of range for d=" +
                            std::to_string(params.d));
  WalkState state(params);
  state.amp(0, v0) = kInvSqrt2;
  state.amp(1, v0) = Complex(0.0, kInvSqrt2);
  return state;
}

WalkState make_pair(CycleParams params, int m, int k, PairBranch branch) {
  const int m_max = max_pair_index(params);
  const int m_min = branch == PairBranch::Lower ? 0 : 1;
  if (m < m_min || m > m_max)
    throw std::out_of_range("pair index m=" + std::to_string(m) + " outside [" +
                            std::to_string(m_min) + ", " + std::to_string(m_max) +
                            "] for d=" + std::to_string(params.d));
  const int d = params.d;
  const int j1 = branch == PairBranch::Lower ? m : d / 2 + m;
  const int j2 = branch == PairBranch::Lower ? d / 2 - m : d - m;
  WalkState state(params);
  add_scaled(state, eigenvector(j1, k, params), kInvSqrt2);
  add_scaled(state, eigenvector(j2, k, params), kInvSqrt2);
  return state;
}

WalkState make_quad(CycleParams params, int m, int k) {
  const int m_max = max_pair_index(params);
  if (m < 1 || m > m_max)
    throw std::out_of_range("quad index m=" + std::to_string(m) + " outside [1, " +
                            std::to_string(m_max) + "] for d=" + std::to_string(params.d));
  const int d = params.d;
  WalkState state(params);
  add_scaled(state, eigenvector(m, k, params), 0.5);
  add_scaled(state, eigenvector(d / 2 - m, k, params), 0.5);
  add_scaled(state, eigenvector(d / 2 + m, k, params), -0.5);
  add_scaled(state, eigenvector(d - m, k, params), -0.5);
  return state;
}

WalkState make_initial_state(CycleParams params, const InitialStateSpec& spec) {
  return std::visit(
      [&](const auto& s) -> WalkState {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SingleNodeSpec>)
          return make_single_node(params, s.v0);
        else if constexpr (std::is_same_v<T, PairSpec>)
          return make_pair(params, s.m, s.k, s.branch);
        else
          return make_quad(params, s.m, s.k);
      },
      spec);
}

InitialStateSpec parse_initial_spec(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("initial-state spec needs '<kind>:<args>', got '" + text +
                                "'");
  const std::string kind = text.substr(0, colon);
  std::string_view args = std::string_view(text).substr(colon + 1);

  std::vector<std::string_view> parts;
  while (true) {
    const std::size_t comma = args.find(',');
    parts.push_back(args.substr(0, comma));
    if (comma == std::string_view::npos) break;
    args = args.substr(comma + 1);
  }

  auto parse_k = [](std::string_view part) {
    const int k = parse_int(part, "coin branch k");
    if (k != 0 && k != 1) throw std::invalid_argument("coin branch k must be 0 or 1");
    return k;
  };

  if (kind == "single") {
    if (parts.size() != 1) throw std::invalid_argument("single takes exactly one node index");
    return SingleNodeSpec{parse_int(parts[0], "node index")};
  }
  if (kind == "pair") {
    if (parts.size() != 2 && parts.size() != 3)
      throw std::invalid_argument("pair takes '<m>,<k>[,upper]'");
    PairBranch branch = PairBranch::Lower;
    if (parts.size() == 3) {
      if (parts[2] == "upper")
        branch = PairBranch::Upper;
      else if (parts[2] != "lower")
        throw std::invalid_argument("pair branch must be 'lower' or 'upper'");
    }
    return PairSpec{parse_int(parts[0], "m"), parse_k(parts[1]), branch};
  }
  if (kind == "quad") {
    if (parts.size() != 2) throw std::invalid_argument("quad takes '<m>,<k>'");
    return QuadSpec{parse_int(parts[0], "m"), parse_k(parts[1])};
  }
  throw std::invalid_argument("unknown initial-state kind '" + kind + "'");
}

std::string format_initial_spec(const InitialStateSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SingleNodeSpec>)
          return "single:" + std::to_string(s.v0);
        else if constexpr (std::is_same_v<T, PairSpec>)
          return "pair:" + std::to_string(s.m) + "," + std::to_string(s.k) +
                 (s.branch == PairBranch::Upper ? ",upper" : "");
        else
          return "quad:" + std::to_string(s.m) + "," + std::to_string(s.k);
      },
      spec);
}

}  // namespace cyclewalk
