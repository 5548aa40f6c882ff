#pragma once

#include "sheafex/graph.hpp"
#include "sheafex/rng.hpp"

#include <utility>
#include <vector>

namespace sheafex {

struct GraphSpec {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted

  WeightedGraph weighted() const { return make_graph(n, edges); }
};

// All connected graphs on exactly n vertices up to isomorphism, 1 <= n <= 8.
std::vector<GraphSpec> connected_graphs(int n);
// Union of connected_graphs(k) for 2 <= k <= max_n (graphs with at least one edge).
std::vector<GraphSpec> connected_catalog(int max_n);

GraphSpec complete_graph(int n);
GraphSpec cycle_graph(int n);
GraphSpec path_graph(int n);
GraphSpec complete_bipartite(int a, int b);
GraphSpec petersen_graph();
GraphSpec icosahedron_graph();
// Uniform-ish simple k-regular graph from the pairing model (retries until simple and connected).
GraphSpec random_regular(int n, int k, CounterRng& rng);

}  // namespace sheafex
