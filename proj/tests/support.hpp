#pragma once

#include "ucent/generators.hpp"
#include "ucent/graph.hpp"

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace ucent::test {

inline Graph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline Graph p3() { return parse("a b\nb c\n"); }
inline Graph k3() { return parse("a b\nb c\nc a\n"); }
inline Graph single_edge() { return parse("a b\n"); }

/// Seeded random connected graphs of varying density with 3..max_n nodes.
inline std::vector<Graph> random_connected_graphs(int count, Index max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> size(3, max_n);
  std::uniform_real_distribution<double> density(0.05, 0.5);
  std::vector<Graph> out;
  for (int k = 0; k < count; ++k) out.push_back(random_connected_graph(size(rng), density(rng), rng));
  return out;
}

inline std::vector<Graph> random_trees(int count, Index min_n, Index max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> size(min_n, max_n);
  std::vector<Graph> out;
  for (int k = 0; k < count; ++k) out.push_back(random_tree(size(rng), rng));
  return out;
}

/// Relabels g through the index permutation `perm` (node i becomes perm[i]).
inline std::vector<Edge> permuted_edges(const Graph& g, const std::vector<Index>& perm) {
  std::vector<Edge> out;
  for (auto [a, b] : g.edges()) out.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
  return out;
}

}  // namespace ucent::test
