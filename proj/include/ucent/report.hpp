#pragma once

#include "ucent/centrality_vector.hpp"
#include "ucent/graph.hpp"
#include "ucent/rank.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ucent {

/// Measure identifiers accepted by compute_measure, in report order.
inline constexpr std::array<std::string_view, 8> kMeasureIds = {
    "u", "linv", "degree", "eigenvector", "closeness", "variance", "cf-closeness", "cf-variance"};

bool is_known_measure(std::string_view id);
/// Only "u" depends on the horizon.
bool measure_uses_horizon(std::string_view id);

/// Evaluates one measure on a connected graph. `horizon` is only read for "u".
CentralityVector<double> compute_measure(const Graph& g, std::string_view id, double horizon = 1.0,
                                         double threshold = 1.0);

/// Serializable single-measure result.
struct CentralityReport {
  std::vector<std::string> nodes;
  std::string measure;
  std::optional<double> horizon;  // null for structural measures
  double threshold = 1.0;
  std::string orientation;
  std::vector<double> values;
  std::vector<std::string> ranking;  // most central first
  std::vector<std::string> central_nodes;

  bool operator==(const CentralityReport&) const = default;
};

CentralityReport make_report(const Graph& g, const CentralityVector<double>& cv, std::optional<double> horizon,
                             double threshold);
void to_json(nlohmann::json& j, const CentralityReport& r);
void from_json(const nlohmann::json& j, CentralityReport& r);

/// "node,score,rank" with a header row; rank 1 is most central.
std::string to_csv(const Graph& g, const CentralityVector<double>& cv);

struct SweepComparison {
  RankCorrelation tau_b;
  RankCorrelation restricted;  // over pairs the reference separates
};

struct SweepPoint {
  double horizon = 0.0;
  CentralityVector<double> scores;
  std::vector<Index> central_nodes;
  std::map<std::string, SweepComparison> comparisons;
};

/// U-centrality over a log-spaced horizon grid, compared against every
/// structural measure at each grid point.
struct SweepReport {
  std::vector<std::string> nodes;
  double threshold = 1.0;
  std::vector<double> grid;
  std::vector<CentralityVector<double>> references;
  std::vector<SweepPoint> points;
};

/// Relative gap below which a reference measure is treated as tied when
/// computing restricted concordance.
inline constexpr double kReferenceTieGap = 1e-9;

std::vector<double> log_grid(double lo, double hi, int points);
SweepReport run_sweep(const Graph& g, double tf_min, double tf_max, int points, double threshold = 1.0);
nlohmann::json to_json(const SweepReport& r);
/// "tf,node,score,rank" with a header row.
std::string to_csv(const SweepReport& r);

/// Eight fill colors, warmest first.
inline constexpr std::array<const char*, 8> kWarmToCool = {"#b2182b", "#d6604d", "#f4a582", "#fddbc7",
                                                           "#d1e5f0", "#92c5de", "#4393c3", "#2166ac"};

/// Palette bucket per node over min-max normalized centrality; 0 is the most
/// central end. A degenerate range maps every node to bucket 0.
std::vector<int> color_buckets(const CentralityVector<double>& cv);
std::string to_dot(const Graph& g, const CentralityVector<double>& cv);

}  // namespace ucent
