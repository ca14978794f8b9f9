// Command-line front end: run walk experiments to CSV, reproduce the three
// reference figures, and execute the verification suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cyclewalk/analytic.hpp"
#include "cyclewalk/initial_states.hpp"
#include "cyclewalk/spectral.hpp"
#include "cyclewalk/verify.hpp"
#include "cyclewalk/walk.hpp"

namespace {

using namespace cyclewalk;

constexpr long kMaxSteps = 10'000'000;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

int write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return std::cout.good() ? 0 : 1;
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return 1;
  }
  return 0;
}

std::string tvd_series_csv(const TvdSeries& deltas) {
  std::ostringstream out;
  out << "t,delta\n";
  for (const TvdPoint& p : deltas) out << p.t << ',' << num(p.delta) << '\n';
  return out.str();
}

std::string tvd_comparison_csv(const TvdSeries& deltas, const std::vector<double>& analytic) {
  std::ostringstream out;
  out << "t,delta,analytic\n";
  for (std::size_t i = 0; i < deltas.size(); ++i)
    out << deltas[i].t << ',' << num(deltas[i].delta) << ',' << num(analytic[i]) << '\n';
  return out.str();
}

std::string distribution_csv(const Distribution& p, const Distribution* analytic) {
  std::ostringstream out;
  out << (analytic ? "v,p,analytic\n" : "v,p\n");
  for (int v = 0; v < p.params.d; ++v) {
    out << v << ',' << num(p.p[v]);
    if (analytic) out << ',' << num(analytic->p[v]);
    out << '\n';
  }
  return out.str();
}

// Per-step analytic TVD matching the initial-state family: the exact limiting
// value for single-node starts, the frozen pair value, and the TVD of the
// damped-oscillation law for quad states.
std::vector<double> analytic_tvd_series(CycleParams params, const InitialStateSpec& spec,
                                        long t_max) {
  std::vector<double> out;
  out.reserve(t_max + 1);
  if (const auto* single = std::get_if<SingleNodeSpec>(&spec)) {
    const double value = tvd(limiting_single_node(params, single->v0));
    out.assign(t_max + 1, value);
  } else if (const auto* pair = std::get_if<PairSpec>(&spec)) {
    out.assign(t_max + 1, tvd_pair(params, pair->m));
  } else {
    const auto& quad = std::get<QuadSpec>(spec);
    for (long t = 0; t <= t_max; ++t) out.push_back(tvd(averaged_quad(params, quad.m, quad.k, t)));
  }
  return out;
}

std::optional<Distribution> analytic_limiting(CycleParams params, const InitialStateSpec& spec) {
  if (const auto* single = std::get_if<SingleNodeSpec>(&spec))
    return limiting_single_node(params, single->v0);
  if (const auto* pair = std::get_if<PairSpec>(&spec)) return limiting_pair(params, pair->m);
  return limiting_pair(params, std::get<QuadSpec>(spec).m);  // quad shares the pair pi
}

int run_simulate(int d, const std::string& initial, long t_max, const std::string& what,
                 const std::string& out_path) {
  const CycleParams params(d);
  const InitialStateSpec spec = parse_initial_spec(initial);
  const WalkState state0 = make_initial_state(params, spec);

  if (what == "tvd_series")
    return write_output(out_path, tvd_series_csv(evolve_averaged(state0, t_max).deltas));
  if (what == "analytic_comparison")
    return write_output(out_path,
                        tvd_comparison_csv(evolve_averaged(state0, t_max).deltas,
                                           analytic_tvd_series(params, spec, t_max)));
  if (what == "averaged_distribution")
    return write_output(out_path,
                        distribution_csv(time_averaged_distribution(state0, t_max), nullptr));
  if (what == "limiting_distribution") {
    const SpectralBasis basis(params);
    const Distribution pi = limiting_distribution(state0, basis);
    const std::optional<Distribution> analytic = analytic_limiting(params, spec);
    return write_output(out_path, distribution_csv(pi, analytic ? &*analytic : nullptr));
  }
  std::cerr << "error: unknown --what '" << what << "'\n";
  return 2;
}

int run_figure(int n, const std::string& out_path) {
  switch (n) {
    case 1:
      return run_simulate(24, "single:0", 5000, "tvd_series", out_path);
    case 2:
      return run_simulate(24, "pair:3,0", 200, "analytic_comparison", out_path);
    case 3:
      return run_simulate(24, "quad:3,0", 1000, "analytic_comparison", out_path);
    default:
      std::cerr << "error: figure number must be 1, 2 or 3\n";
      return 2;
  }
}

int run_verify() {
  bool all_passed = true;
  for (const CheckResult& r : run_all_checks()) {
    std::printf("%-4s %-50s %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    all_passed = all_passed && r.passed;
  }
  return all_passed ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hadamard-coined quantum walk on even cycles"};
  app.require_subcommand(1);

  int d = 24;
  std::string initial = "single:0";
  long t_max = 1000;
  std::string what = "tvd_series";
  std::string out_path = "-";

  CLI::App* simulate = app.add_subcommand("simulate", "run one experiment to CSV");
  simulate->add_option("--d", d, "cycle size (even, >= 4)")->required();
  simulate->add_option("--initial", initial,
                       "initial state: single:<v0> | pair:<m>,<k>[,upper] | quad:<m>,<k>")
      ->required();
  simulate->add_option("--t-max", t_max, "number of walk steps");
  simulate->add_option("--what", what,
                       "tvd_series | averaged_distribution | limiting_distribution | "
                       "analytic_comparison");
  simulate->add_option("--out", out_path, "output file (default stdout)");

  int figure_n = 0;
  CLI::App* figure = app.add_subcommand("figure", "reproduce a reference figure as CSV");
  figure->add_option("n", figure_n, "figure number (1, 2 or 3)")->required();
  figure->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (simulate->parsed()) {
      if (t_max < 0 || t_max > kMaxSteps) {
        std::cerr << "error: --t-max must be in [0, " << kMaxSteps << "]\n";
        return 2;
      }
      return run_simulate(d, initial, t_max, what, out_path);
    }
    if (figure->parsed()) return run_figure(figure_n, out_path);
    if (verify->parsed()) return run_verify();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
