#include "ucent/report.hpp"

#include "ucent/classical.hpp"
#include "ucent/errors.hpp"
#include "ucent/spectral.hpp"
#include "ucent/ucentrality.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace ucent {

bool is_known_measure(std::string_view id) {
  return std::find(kMeasureIds.begin(), kMeasureIds.end(), id) != kMeasureIds.end();
}

bool measure_uses_horizon(std::string_view id) { return id == "u"; }

CentralityVector<double> compute_measure(const Graph& g, std::string_view id, double horizon, double threshold) {
  if (!is_known_measure(id)) throw InvalidArgument("unknown measure '" + std::string(id) + "'");
  require_connected(g);
  if (id == "degree") return degree_centrality(g);
  if (id == "eigenvector") return eigenvector_centrality(g);
  if (id == "closeness") return closeness_centrality(all_pairs_hop_distances(g));
  if (id == "variance") return variance_centrality(all_pairs_hop_distances(g));

  if (id == "u") return u_centrality(decompose(g), horizon, threshold);
  const Matrix<double> pinv = laplacian_pseudoinverse(g);
  if (id == "linv") return laplacian_inverse_centrality(pinv);
  const Matrix<double> r = resistance_distances(pinv);
  if (id == "cf-closeness") return current_flow_closeness(r);
  return current_flow_variance(r);
}

namespace {

std::vector<std::string> labels_of(const Graph& g, const std::vector<Index>& idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (Index i : idx) out.push_back(g.label(i));
  return out;
}

std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

}  // namespace

CentralityReport make_report(const Graph& g, const CentralityVector<double>& cv, std::optional<double> horizon,
                             double threshold) {
  CentralityReport r;
  r.nodes = g.labels();
  r.measure = cv.measure;
  r.horizon = horizon;
  r.threshold = threshold;
  r.orientation = to_string(cv.orientation);
  r.values.assign(cv.scores.data(), cv.scores.data() + cv.scores.size());
  r.ranking = labels_of(g, cv.ranking());
  r.central_nodes = labels_of(g, cv.central_set());
  return r;
}

void to_json(nlohmann::json& j, const CentralityReport& r) {
  j = nlohmann::json{{"nodes", r.nodes},
                     {"measure", r.measure},
                     {"tf", r.horizon ? nlohmann::json(*r.horizon) : nlohmann::json(nullptr)},
                     {"c", r.threshold},
                     {"orientation", r.orientation},
                     {"values", r.values},
                     {"ranking", r.ranking},
                     {"central_nodes", r.central_nodes}};
}

void from_json(const nlohmann::json& j, CentralityReport& r) {
  j.at("nodes").get_to(r.nodes);
  j.at("measure").get_to(r.measure);
  const auto& tf = j.at("tf");
  r.horizon = tf.is_null() ? std::nullopt : std::optional<double>(tf.get<double>());
  j.at("c").get_to(r.threshold);
  j.at("orientation").get_to(r.orientation);
  j.at("values").get_to(r.values);
  j.at("ranking").get_to(r.ranking);
  j.at("central_nodes").get_to(r.central_nodes);
}

std::string to_csv(const Graph& g, const CentralityVector<double>& cv) {
  std::ostringstream os;
  os << "node,score,rank\n";
  const auto ranks = cv.ranks();
  for (Index i = 0; i < cv.size(); ++i) {
    os << g.label(i) << ',' << format_number(cv.scores(i)) << ',' << ranks[static_cast<std::size_t>(i)] << '\n';
  }
  return os.str();
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi)) throw InvalidArgument("need 0 < tf-min < tf-max");
  if (points < 2) throw InvalidArgument("need at least two grid points");
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int k = 0; k < points; ++k) grid[static_cast<std::size_t>(k)] = std::exp(a + (b - a) * k / (points - 1));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

SweepReport run_sweep(const Graph& g, double tf_min, double tf_max, int points, double threshold) {
  SweepReport report;
  report.grid = log_grid(tf_min, tf_max, points);
  if (!(threshold > 0.0) || !std::isfinite(threshold)) throw InvalidArgument("c must be positive and finite");
  require_connected(g);
  report.nodes = g.labels();
  report.threshold = threshold;

  const auto dec = decompose(g);
  const Matrix<double> pinv = laplacian_pseudoinverse(g);
  const Matrix<double> resistance = resistance_distances(pinv);
  const auto dist = all_pairs_hop_distances(g);
  report.references = {laplacian_inverse_centrality(pinv), degree_centrality(g),
                       eigenvector_centrality(g),          closeness_centrality(dist),
                       variance_centrality(dist),          current_flow_closeness(resistance),
                       current_flow_variance(resistance)};

  for (double tf : report.grid) {
    SweepPoint p;
    p.horizon = tf;
    p.scores = u_centrality(dec, tf, threshold);
    p.central_nodes = p.scores.central_set();
    for (const auto& ref : report.references) {
      p.comparisons[ref.measure] = {kendall_tau(p.scores, ref),
                                    restricted_concordance(p.scores, ref, kReferenceTieGap)};
    }
    report.points.push_back(std::move(p));
  }
  return report;
}

nlohmann::json to_json(const SweepReport& r) {
  using nlohmann::json;
  json refs = json::object();
  for (const auto& ref : r.references) {
    refs[ref.measure] = {{"orientation", to_string(ref.orientation)},
                         {"values", std::vector<double>(ref.scores.data(), ref.scores.data() + ref.scores.size())}};
  }
  json points = json::array();
  for (const auto& p : r.points) {
    json cmp = json::object();
    for (const auto& [id, c] : p.comparisons) {
      cmp[id] = {{"tau_b", c.tau_b.value},
                 {"tau_b_degenerate", c.tau_b.degenerate},
                 {"restricted", c.restricted.value},
                 {"restricted_degenerate", c.restricted.degenerate}};
    }
    std::vector<std::string> central;
    for (Index i : p.central_nodes) central.push_back(r.nodes[static_cast<std::size_t>(i)]);
    points.push_back({{"tf", p.horizon},
                      {"values", std::vector<double>(p.scores.scores.data(),
                                                     p.scores.scores.data() + p.scores.scores.size())},
                      {"central_nodes", central},
                      {"tau", cmp}});
  }
  return {{"nodes", r.nodes},
          {"measure", "u"},
          {"c", r.threshold},
          {"orientation", "lower"},
          {"grid", r.grid},
          {"references", refs},
          {"points", points}};
}

std::string to_csv(const SweepReport& r) {
  std::ostringstream os;
  os << "tf,node,score,rank\n";
  for (const auto& p : r.points) {
    const auto ranks = p.scores.ranks();
    for (Index i = 0; i < p.scores.size(); ++i) {
      os << format_number(p.horizon) << ',' << r.nodes[static_cast<std::size_t>(i)] << ','
         << format_number(p.scores.scores(i)) << ',' << ranks[static_cast<std::size_t>(i)] << '\n';
    }
  }
  return os.str();
}

std::vector<int> color_buckets(const CentralityVector<double>& cv) {
  const Index n = cv.size();
  std::vector<int> buckets(static_cast<std::size_t>(n), 0);
  if (n == 0) return buckets;
  double best = cv.centrality(0);
  double worst = best;
  for (Index i = 1; i < n; ++i) {
    best = std::max(best, cv.centrality(i));
    worst = std::min(worst, cv.centrality(i));
  }
  const double range = best - worst;
  if (range <= cv.tie_tolerance()) return buckets;
  const int last = static_cast<int>(kWarmToCool.size()) - 1;
  for (Index i = 0; i < n; ++i) {
    const double t = (best - cv.centrality(i)) / range;
    buckets[static_cast<std::size_t>(i)] = std::min(last, static_cast<int>(std::floor(t * kWarmToCool.size())));
  }
  return buckets;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(const Graph& g, const CentralityVector<double>& cv) {
  const auto buckets = color_buckets(cv);
  std::ostringstream os;
  os << "graph " << quoted(cv.measure) << " {\n";
  os << "  node [style=filled];\n";
  for (Index i = 0; i < g.size(); ++i) {
    os << "  " << quoted(g.label(i)) << " [fillcolor=" << quoted(kWarmToCool[static_cast<std::size_t>(buckets[static_cast<std::size_t>(i)])])
       << ", tooltip=" << quoted(format_number(cv.scores(i))) << "];\n";
  }
  for (const auto& [a, b] : g.edges()) os << "  " << quoted(g.label(a)) << " -- " << quoted(g.label(b)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ucent
