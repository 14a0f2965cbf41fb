#include "ucent/cli.hpp"

#include "ucent/control.hpp"
#include "ucent/errors.hpp"
#include "ucent/generators.hpp"
#include "ucent/report.hpp"
#include "ucent/spectral.hpp"
#include "ucent/ucentrality.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>

namespace ucent::cli {

OracleReport oracle_check(const Graph& g, Index node, double horizon, double threshold, int steps, int panels) {
  require_connected(g);
  const auto lap = laplacian<double>(g);
  const auto dec = decompose_laplacian(lap);
  const auto setup = ControlSetup<double>::single(node, horizon, threshold);

  OracleReport r;
  r.node = g.label(node);
  r.horizon = horizon;
  r.threshold = threshold;

  const Vector<double> closed = terminal_deviation(dec, node, horizon, threshold);
  const Matrix<double> w_spec = gramian_spectral(dec, setup);
  const Vector<double> levels = constant_optimal_input(setup, w_spec);
  const auto traj = simulate(lap, setup, levels, steps);
  const Vector<double> simulated =
      traj.terminal() - Vector<double>::Constant(g.size(), threshold / static_cast<double>(g.size()));
  r.closed_form_norm = closed.norm();
  r.simulated_norm = simulated.norm();
  r.deviation_error = (closed - simulated).norm() / threshold;

  const Matrix<double> w_quad = gramian_quadrature(lap, setup, panels);
  r.gramian_error = (w_spec - w_quad).norm() / w_spec.norm();

  r.energy = solve_min_energy(w_quad, threshold).energy;
  r.energy_expected = threshold * threshold / horizon;
  r.energy_error = std::abs(r.energy - r.energy_expected) / r.energy_expected;
  return r;
}

void print(std::ostream& os, const OracleReport& r) {
  auto verdict = [](bool ok) { return ok ? "ok" : "FAIL"; };
  os << std::setprecision(10);
  os << "node " << r.node << ", tf = " << r.horizon << ", c = " << r.threshold << '\n';
  os << "closed-form deviation norm: " << r.closed_form_norm << '\n';
  os << "simulated deviation norm:   " << r.simulated_norm << '\n';
  os << "deviation difference / c:   " << r.deviation_error << " (tol " << kDeviationTol << ") "
     << verdict(r.deviation_ok()) << '\n';
  os << "gramian residual (rel):     " << r.gramian_error << " (tol " << kGramianTol << ") "
     << verdict(r.gramian_ok()) << '\n';
  os << "energy E = " << r.energy << " vs c^2/tf = " << r.energy_expected << ", rel err " << r.energy_error
     << " (tol " << kEnergyTol << ") " << verdict(r.energy_ok()) << '\n';
}

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string input;
  std::string gen;
  std::string measure;
  std::optional<double> horizon;
  double tf_min = 1e-3;
  double tf_max = 1e3;
  int points = 7;
  double threshold = 1.0;
  int steps = 1000;
  int panels = 256;
  std::string output;
  std::string format = "json";
  std::string node;
};

Graph load_graph(const Options& o) {
  if (o.input.empty() == o.gen.empty()) throw UsageError("exactly one of --input or --gen is required");
  return o.input.empty() ? generate(o.gen) : read_edge_list_file(o.input);
}

void check_threshold(const Options& o) {
  if (!(o.threshold > 0.0) || !std::isfinite(o.threshold)) throw UsageError("--c must be positive and finite");
}

void check_measure(const Options& o) {
  if (!is_known_measure(o.measure)) throw UsageError("unknown measure '" + o.measure + "'");
  if (measure_uses_horizon(o.measure)) {
    if (!o.horizon) throw UsageError("measure '" + o.measure + "' needs --tf");
    if (!(*o.horizon > 0.0) || !std::isfinite(*o.horizon)) throw UsageError("--tf must be positive and finite");
  } else if (o.horizon) {
    throw UsageError("--tf does not apply to measure '" + o.measure + "'");
  }
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output);
  if (!file) throw UsageError("cannot write '" + o.output + "'");
  file << text;
}

int cmd_centrality(const Options& o, std::ostream& out) {
  check_measure(o);
  check_threshold(o);
  const Graph g = load_graph(o);
  const auto cv = compute_measure(g, o.measure, o.horizon.value_or(1.0), o.threshold);
  if (o.format == "csv") {
    emit(o, to_csv(g, cv), out);
  } else {
    nlohmann::json j = make_report(g, cv, o.horizon, o.threshold);
    emit(o, j.dump(2) + "\n", out);
  }
  return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  check_threshold(o);
  if (!(o.tf_min > 0.0) || !(o.tf_max > o.tf_min)) throw UsageError("need 0 < --tf-min < --tf-max");
  if (o.points < 2) throw UsageError("--points must be at least 2");
  const Graph g = load_graph(o);
  const auto report = run_sweep(g, o.tf_min, o.tf_max, o.points, o.threshold);
  emit(o, o.format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n", out);
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  check_threshold(o);
  const double horizon = o.horizon.value_or(1.0);
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw UsageError("--tf must be positive and finite");
  if (o.steps < 1) throw UsageError("--steps must be at least 1");
  if (o.panels < 2 || o.panels % 2) throw UsageError("--panels must be even and at least 2");
  const Graph g = load_graph(o);
  const auto node = g.index_of(o.node);
  if (!node) throw UsageError("unknown node label '" + o.node + "'");
  const auto report = oracle_check(g, *node, horizon, o.threshold, o.steps, o.panels);
  std::ostringstream text;
  print(text, report);
  emit(o, text.str(), out);
  return report.ok() ? kOk : kCheckFailed;
}

int cmd_dot(const Options& o, std::ostream& out) {
  check_measure(o);
  check_threshold(o);
  const Graph g = load_graph(o);
  emit(o, to_dot(g, compute_measure(g, o.measure, o.horizon.value_or(1.0), o.threshold)), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"U-centrality and structural centrality measures for undirected graphs", "ucent"};
  app.require_subcommand(1);
  Options o;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("-i,--input", o.input, "edge-list file");
    sub->add_option("--gen", o.gen, "generator: tree:N:SEED, path:N, star:N, cycle:N, complete:N");
    sub->add_option("--c", o.threshold, "aggregate-state threshold")->capture_default_str();
    sub->add_option("-o,--output", o.output, "write to file instead of stdout");
  };
  const std::string measures = "u, linv, degree, eigenvector, closeness, variance, cf-closeness, cf-variance";

  auto* centrality = app.add_subcommand("centrality", "score every node with one measure");
  add_graph(centrality);
  centrality->add_option("-m,--measure", o.measure, measures)->required();
  centrality->add_option("--tf", o.horizon, "control horizon (measure u only)");
  centrality->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "U-centrality over a log-spaced horizon grid");
  add_graph(sweep);
  sweep->add_option("--tf-min", o.tf_min)->capture_default_str();
  sweep->add_option("--tf-max", o.tf_max)->capture_default_str();
  sweep->add_option("--points", o.points)->capture_default_str();
  sweep->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "check closed forms against quadrature and simulation");
  add_graph(oracle);
  oracle->add_option("--node", o.node, "label of the controlled node")->required();
  oracle->add_option("--tf", o.horizon, "control horizon (default 1)");
  oracle->add_option("--steps", o.steps, "RK4 steps")->capture_default_str();
  oracle->add_option("--panels", o.panels, "Simpson panels (even)")->capture_default_str();

  auto* dot = app.add_subcommand("dot", "Graphviz export colored by centrality");
  dot->alias("export-dot");
  add_graph(dot);
  dot->add_option("-m,--measure", o.measure, measures)->required();
  dot->add_option("--tf", o.horizon, "control horizon (measure u only)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "ucent: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (app.got_subcommand(centrality)) return cmd_centrality(o, out);
    if (app.got_subcommand(sweep)) return cmd_sweep(o, out);
    if (app.got_subcommand(oracle)) return cmd_oracle(o, out);
    return cmd_dot(o, out);
  } catch (const ParseError& e) {
    err << "ucent: parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const DisconnectedGraph& e) {
    err << "ucent: " << e.what() << '\n';
    return kDisconnected;
  } catch (const UsageError& e) {
    err << "ucent: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "ucent: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "ucent: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace ucent::cli
