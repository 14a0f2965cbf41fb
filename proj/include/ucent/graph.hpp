#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ucent {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Unordered node pair, stored with first < second.
using Edge = std::pair<Index, Index>;

/// Simple undirected graph with string labels mapped to dense indices.
///
/// Immutable once built. Self-loops are rejected; duplicate edges (in either
/// orientation) are collapsed.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> labels, const std::vector<Edge>& edges);

  Index size() const noexcept { return static_cast<Index>(labels_.size()); }
  Index num_edges() const noexcept { return static_cast<Index>(edges_.size()); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Index i) const { return labels_.at(static_cast<std::size_t>(i)); }
  std::optional<Index> index_of(const std::string& label) const;

  /// Sorted, deduplicated edge list.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Index>& neighbors(Index i) const { return adjacency_[static_cast<std::size_t>(i)]; }
  Index degree(Index i) const { return static_cast<Index>(neighbors(i).size()); }
  Eigen::VectorXi degrees() const;

  template <typename Scalar = double>
  Matrix<Scalar> adjacency() const {
    Matrix<Scalar> a = Matrix<Scalar>::Zero(size(), size());
    for (const auto& [i, j] : edges_) {
      a(i, j) = Scalar(1);
      a(j, i) = Scalar(1);
    }
    return a;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Index>> adjacency_;
};

/// Reads a whitespace-separated edge list. Lines whose first non-blank
/// character is '#' are comments. Labels get indices in order of first
/// appearance. Throws ParseError on self-loops and on lines without exactly
/// two tokens.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// L = diag(d) - A.
template <typename Scalar = double>
Matrix<Scalar> laplacian(const Graph& g) {
  Matrix<Scalar> l = Matrix<Scalar>::Zero(g.size(), g.size());
  for (const auto& [i, j] : g.edges()) {
    l(i, j) = Scalar(-1);
    l(j, i) = Scalar(-1);
    l(i, i) += Scalar(1);
    l(j, j) += Scalar(1);
  }
  return l;
}

/// Reachability from node 0. The empty graph is not connected.
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// All-pairs hop distances with row sums D_i and grand total W.
struct DistanceMatrix {
  Eigen::MatrixXi hops;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> row_sums;
  std::int64_t total = 0;

  Index size() const noexcept { return hops.rows(); }
};

/// BFS from each source. Throws DisconnectedGraph if any pair is unreachable.
DistanceMatrix all_pairs_hop_distances(const Graph& g);

/// Throws DisconnectedGraph unless g is connected with at least two nodes.
void require_connected(const Graph& g);

}  // namespace ucent
