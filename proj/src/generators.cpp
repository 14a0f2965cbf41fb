#include "ucent/generators.hpp"

#include "ucent/errors.hpp"

#include <functional>
#include <queue>
#include <sstream>
#include <vector>

namespace ucent {

namespace {

std::vector<std::string> numeric_labels(Index n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

void require_size(Index n, Index min, const char* kind) {
  if (n < min) {
    throw InvalidArgument(std::string(kind) + " needs at least " + std::to_string(min) + " nodes");
  }
}

std::vector<Edge> prufer_decode(const std::vector<Index>& seq, Index n) {
  std::vector<Index> remaining(static_cast<std::size_t>(n), 1);
  for (Index v : seq) ++remaining[static_cast<std::size_t>(v)];

  std::priority_queue<Index, std::vector<Index>, std::greater<>> leaves;
  for (Index v = 0; v < n; ++v) {
    if (remaining[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (Index v : seq) {
    const Index leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--remaining[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  const Index a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return edges;
}

}  // namespace

Graph path_graph(Index n) {
  require_size(n, 1, "path");
  std::vector<Edge> edges;
  for (Index i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(numeric_labels(n), edges);
}

Graph star_graph(Index n) {
  require_size(n, 1, "star");
  std::vector<Edge> edges;
  for (Index i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph(numeric_labels(n), edges);
}

Graph cycle_graph(Index n) {
  require_size(n, 3, "cycle");
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(numeric_labels(n), edges);
}

Graph complete_graph(Index n) {
  require_size(n, 1, "complete");
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(numeric_labels(n), edges);
}

Graph random_tree(Index n, std::mt19937_64& rng) {
  require_size(n, 1, "tree");
  if (n <= 2) return path_graph(n);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  std::vector<Index> seq(static_cast<std::size_t>(n - 2));
  for (auto& v : seq) v = pick(rng);
  return Graph(numeric_labels(n), prufer_decode(seq, n));
}

Graph random_tree(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_tree(n, rng);
}

Graph random_connected_graph(Index n, double p, std::mt19937_64& rng) {
  const Graph tree = random_tree(n, rng);
  std::vector<Edge> edges = tree.edges();
  std::bernoulli_distribution coin(p);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(numeric_labels(n), edges);
}

Graph generate(const std::string& descriptor) {
  std::vector<std::string> parts;
  std::istringstream ss(descriptor);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);

  auto number = [&](std::size_t k) -> long long {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(parts.at(k), &used);
      if (used != parts[k].size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw InvalidArgument("bad generator descriptor '" + descriptor + "'");
    }
  };

  if (parts.empty()) throw InvalidArgument("empty generator descriptor");
  const std::string& kind = parts[0];
  const std::size_t expected = kind == "tree" ? 3 : 2;
  if (parts.size() != expected) throw InvalidArgument("bad generator descriptor '" + descriptor + "'");
  const Index n = static_cast<Index>(number(1));

  if (kind == "tree") return random_tree(n, static_cast<std::uint64_t>(number(2)));
  if (kind == "path") return path_graph(n);
  if (kind == "star") return star_graph(n);
  if (kind == "cycle") return cycle_graph(n);
  if (kind == "complete") return complete_graph(n);
  throw InvalidArgument("unknown generator '" + kind + "'");
}

}  // namespace ucent
