#pragma once

#include "ucent/graph.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace ucent {

// Generated graphs label nodes "0", "1", ... in index order.

Graph path_graph(Index n);
/// Node 0 is the hub.
Graph star_graph(Index n);
Graph cycle_graph(Index n);
Graph complete_graph(Index n);

/// Uniformly random labelled tree, decoded from a random Prüfer sequence.
Graph random_tree(Index n, std::mt19937_64& rng);
Graph random_tree(Index n, std::uint64_t seed);

/// G(n, p) conditioned on connectivity: a random spanning tree is overlaid
/// with independent extra edges of probability p.
Graph random_connected_graph(Index n, double p, std::mt19937_64& rng);

/// Builds a graph from a descriptor such as "tree:50:7", "path:10", "star:5",
/// "cycle:6" or "complete:4". Throws InvalidArgument on malformed specs.
Graph generate(const std::string& descriptor);

}  // namespace ucent
