#pragma once

#include "sheafex/complex.hpp"
#include "sheafex/error.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sheafex {

struct Edge {
  int u = 0;  // e⁻, the smaller vertex in the fixed order
  int v = 0;  // e⁺
};

/** Weighted graph view of the 1-skeleton of a weighted complex. */
class WeightedGraph {
 public:
  explicit WeightedGraph(const WeightedComplex& x);

  const WeightedComplex& complex() const { return complex_; }
  int vertex_count() const { return static_cast<int>(vertex_weights_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& names() const { return complex_.shell().vertex_names(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const Rational& vertex_weight(int v) const { return vertex_weights_[static_cast<std::size_t>(v)]; }
  const Rational& edge_weight(int e) const { return edge_weights_[static_cast<std::size_t>(e)]; }
  const std::vector<Rational>& vertex_weights() const { return vertex_weights_; }
  const std::vector<Rational>& edge_weights() const { return edge_weights_; }

  // (neighbor, edge index) pairs, neighbors ascending.
  const std::vector<std::pair<int, int>>& incident(int v) const { return incident_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(incident(v).size()); }
  // -1 when u and v are not adjacent.
  int edge_between(int u, int v) const;

  const std::optional<std::vector<int>>& partite() const { return complex_.partite(); }
  int class_count() const { return complex_.class_count(); }

 private:
  WeightedComplex complex_;
  std::vector<Edge> edges_;
  std::vector<Rational> vertex_weights_;
  std::vector<Rational> edge_weights_;
  std::vector<std::vector<std::pair<int, int>>> incident_;
};

/**
 * All vertex and edge weights as integer numerators over one common
 * denominator, for exact enumeration loops. Throws BudgetExceeded when the
 * denominator exceeds 2^40.
 */
struct IntegerWeights {
  std::int64_t denominator = 1;
  std::vector<std::int64_t> vertex;
  std::vector<std::int64_t> edge;
};

IntegerWeights integer_weights(const WeightedGraph& g);

// Names "0".."n-1", zero-padded to equal width so lexicographic = numeric.
std::string padded_name(int i, int n);

// Canonically weighted graph on vertices 0..n-1 (every vertex must lie on an edge).
WeightedGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                         std::optional<std::vector<int>> partite = std::nullopt);

enum class PathKind { Cycle, ClosedPath, OpenPath };

struct CyclePath {
  PathKind kind = PathKind::Cycle;
  std::vector<int> vertices;  // cycle: starts at its smallest vertex; path: first < last
  std::vector<int> edges;     // sorted edge indices
  int length() const { return static_cast<int>(edges.size()); }
};

// Restricts enumeration to the edges flagged true.
using EdgeMask = std::vector<bool>;

/**
 * Simple cycles of length 3..max_len, each once, ordered by length and then
 * vertex sequence.
 */
std::vector<CyclePath> enumerate_cycles(const WeightedGraph& g, int max_len,
                                        std::uint64_t cap = kDefaultEnumerationBudget,
                                        const EdgeMask* mask = nullptr);

// Closed paths of length 1..max_len (simple, distinct endpoints), each once up to reversal.
std::vector<CyclePath> enumerate_short_paths(const WeightedGraph& g, int max_len,
                                             std::uint64_t cap = kDefaultEnumerationBudget);

struct TsConstants {
  Rational t;  // max w(e)/w(x) over incident pairs
  Rational s;  // max w(e)
};

TsConstants ts_constants(const WeightedGraph& g);

// Connected-component label per vertex, restricted to masked edges when given.
std::vector<int> components(const WeightedGraph& g, const EdgeMask* mask = nullptr);
bool is_connected(const WeightedGraph& g);
// Hop distances from `source` (-1 for unreachable).
std::vector<int> bfs_distances(const WeightedGraph& g, int source, const EdgeMask* mask = nullptr);
// Largest finite hop distance.
int diameter(const WeightedGraph& g);
// Edges lying on no cycle.
std::vector<int> bridges(const WeightedGraph& g);
// 2-coloring when bipartite and connected components are colored from their smallest vertex.
std::optional<std::vector<int>> bipartition(const WeightedGraph& g);

}  // namespace sheafex
