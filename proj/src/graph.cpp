#include "ucent/graph.hpp"

#include "ucent/errors.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

namespace ucent {

Graph::Graph(std::vector<std::string> labels, const std::vector<Edge>& edges)
    : labels_(std::move(labels)) {
  const Index n = size();
  for (Index i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[static_cast<std::size_t>(i)], i).second) {
      throw InvalidArgument("duplicate node label '" + labels_[static_cast<std::size_t>(i)] + "'");
    }
  }
  edges_.reserve(edges.size());
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw InvalidArgument("edge endpoint out of range");
    if (i == j) throw InvalidArgument("self-loop on node '" + labels_[static_cast<std::size_t>(i)] + "'");
    if (i > j) std::swap(i, j);
    edges_.emplace_back(i, j);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [i, j] : edges_) {
    adjacency_[static_cast<std::size_t>(i)].push_back(j);
    adjacency_[static_cast<std::size_t>(j)].push_back(i);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

std::optional<Index> Graph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Eigen::VectorXi Graph::degrees() const {
  Eigen::VectorXi d(size());
  for (Index i = 0; i < size(); ++i) d(i) = static_cast<int>(degree(i));
  return d;
}

Graph parse_edge_list(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Index> seen;
  std::vector<Edge> edges;

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = seen.emplace(label, static_cast<Index>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::vector<std::string> fields;
    for (std::string tok; tokens >> tok;) fields.push_back(std::move(tok));
    if (fields.empty() || fields.front().front() == '#') continue;
    if (fields.size() != 2) {
      throw ParseError(ParseError::Kind::TokenCount, line_no,
                       "line " + std::to_string(line_no) + ": expected 2 tokens, got " +
                           std::to_string(fields.size()));
    }
    if (fields[0] == fields[1]) {
      throw ParseError(ParseError::Kind::SelfLoop, line_no,
                       "line " + std::to_string(line_no) + ": self-loop on '" + fields[0] + "'");
    }
    const Index a = intern(fields[0]);
    const Index b = intern(fields[1]);
    edges.emplace_back(a, b);
  }
  return Graph(std::move(labels), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(ParseError::Kind::Io, 0, "cannot open '" + path + "'");
  return parse_edge_list(in);
}

namespace {

// Hop distance from `source`; -1 marks unreachable nodes.
std::vector<int> bfs(const Graph& g, Index source) {
  std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
  std::queue<Index> frontier;
  dist[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Index u = frontier.front();
    frontier.pop();
    for (Index v : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.size() == 0) return false;
  const auto dist = bfs(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_tree(const Graph& g) { return is_connected(g) && g.num_edges() == g.size() - 1; }

void require_connected(const Graph& g) {
  if (g.size() < 2) throw DisconnectedGraph("graph needs at least two nodes");
  if (!is_connected(g)) throw DisconnectedGraph();
}

DistanceMatrix all_pairs_hop_distances(const Graph& g) {
  const Index n = g.size();
  DistanceMatrix out;
  out.hops.resize(n, n);
  out.row_sums.resize(n);
  for (Index s = 0; s < n; ++s) {
    const auto dist = bfs(g, s);
    std::int64_t sum = 0;
    for (Index t = 0; t < n; ++t) {
      const int d = dist[static_cast<std::size_t>(t)];
      if (d < 0) throw DisconnectedGraph();
      out.hops(s, t) = d;
      sum += d;
    }
    out.row_sums(s) = sum;
    out.total += sum;
  }
  return out;
}

}  // namespace ucent
