#include "sheafex/catalog.hpp"

#include "sheafex/error.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

namespace sheafex {

namespace {

int pair_bit(int u, int v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

using Adjacency = std::vector<std::uint32_t>;  // neighbor bitmask per vertex

std::uint32_t canonical_code(int n, const Adjacency& adj) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  auto deg = [&](int v) { return __builtin_popcount(adj[static_cast<std::size_t>(v)]); };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return deg(a) < deg(b) || (deg(a) == deg(b) && a < b); });
  // Blocks of equal degree; only permutations inside blocks are tried.
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg(order[static_cast<std::size_t>(j)]) == deg(order[static_cast<std::size_t>(i)])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint32_t best = ~0U;
  std::vector<int> pos(static_cast<std::size_t>(n));
  auto evaluate = [&]() {
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::uint32_t code = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (adj[static_cast<std::size_t>(u)] >> v & 1U)
          code |= 1U << pair_bit(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
    best = std::min(best, code);
  };
  // Odometer over block permutations.
  for (auto [a, b] : blocks) std::sort(order.begin() + a, order.begin() + b);
  while (true) {
    evaluate();
    std::size_t k = 0;
    for (; k < blocks.size(); ++k) {
      auto [a, b] = blocks[k];
      if (std::next_permutation(order.begin() + a, order.begin() + b)) break;
    }
    if (k == blocks.size()) break;
  }
  return best;
}

GraphSpec from_code(int n, std::uint32_t code) {
  GraphSpec g;
  g.n = n;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (code >> pair_bit(u, v) & 1U) g.edges.emplace_back(u, v);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace

std::vector<GraphSpec> connected_graphs(int n) {
  if (n < 1 || n > 8) throw Error(ErrorKind::PreconditionViolated, "catalog supports 1 <= n <= 8");
  std::vector<std::uint32_t> level{0};  // the single-vertex graph
  for (int m = 2; m <= n; ++m) {
    std::set<std::uint32_t> next;
    for (std::uint32_t code : level) {
      Adjacency adj(static_cast<std::size_t>(m), 0);
      for (int v = 1; v < m - 1; ++v)
        for (int u = 0; u < v; ++u)
          if (code >> pair_bit(u, v) & 1U) {
            adj[static_cast<std::size_t>(u)] |= 1U << v;
            adj[static_cast<std::size_t>(v)] |= 1U << u;
          }
      const int x = m - 1;
      for (std::uint32_t nb = 1; nb < (1U << (m - 1)); ++nb) {
        Adjacency a = adj;
        a[static_cast<std::size_t>(x)] = nb;
        for (int u = 0; u < x; ++u)
          if (nb >> u & 1U) a[static_cast<std::size_t>(u)] |= 1U << x;
        next.insert(canonical_code(m, a));
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::vector<GraphSpec> out;
  for (std::uint32_t code : level) out.push_back(from_code(n, code));
  std::stable_sort(out.begin(), out.end(),
                   [](const GraphSpec& a, const GraphSpec& b) { return a.edges.size() < b.edges.size(); });
  return out;
}

std::vector<GraphSpec> connected_catalog(int max_n) {
  std::vector<GraphSpec> out;
  for (int n = 2; n <= max_n; ++n) {
    auto level = connected_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

GraphSpec complete_graph(int n) {
  GraphSpec g{n, {}};
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  return g;
}

GraphSpec cycle_graph(int n) {
  GraphSpec g{n, {}};
  for (int i = 0; i < n; ++i) g.edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

GraphSpec path_graph(int n) {
  GraphSpec g{n, {}};
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

GraphSpec complete_bipartite(int a, int b) {
  GraphSpec g{a + b, {}};
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.edges.emplace_back(u, v);
  return g;
}

GraphSpec petersen_graph() {
  GraphSpec g{10, {}};
  for (int i = 0; i < 5; ++i) {
    g.edges.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
    g.edges.emplace_back(i, i + 5);
    g.edges.emplace_back(5 + std::min(i, (i + 2) % 5), 5 + std::max(i, (i + 2) % 5));
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

GraphSpec icosahedron_graph() {
  // Vertex 0 and 11 are poles; 1..5 upper ring, 6..10 lower ring.
  GraphSpec g{12, {}};
  for (int i = 0; i < 5; ++i) {
    const int up = 1 + i, up_next = 1 + (i + 1) % 5;
    const int lo = 6 + i, lo_next = 6 + (i + 1) % 5;
    g.edges.emplace_back(0, up);
    g.edges.emplace_back(std::min(up, up_next), std::max(up, up_next));
    g.edges.emplace_back(up, lo);
    g.edges.emplace_back(up_next, lo);
    g.edges.emplace_back(std::min(lo, lo_next), std::max(lo, lo_next));
    g.edges.emplace_back(lo, 11);
  }
  for (auto& [u, v] : g.edges)
    if (u > v) std::swap(u, v);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

GraphSpec random_regular(int n, int k, CounterRng& rng) {
  if (k >= n || (n * k) % 2 != 0) throw Error(ErrorKind::PreconditionViolated, "no k-regular graph on n vertices");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < k; ++i) points.push_back(v);
    for (std::size_t i = points.size(); i > 1; --i) std::swap(points[i - 1], points[rng.below(i)]);
    std::set<std::pair<int, int>> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      int u = points[i], v = points[i + 1];
      if (u > v) std::swap(u, v);
      if (u == v || !edges.insert({u, v}).second) {
        simple = false;
        break;
      }
    }
    if (!simple) continue;
    GraphSpec g{n, {edges.begin(), edges.end()}};
    if (is_connected(g.weighted())) return g;
  }
  throw Error(ErrorKind::BudgetExceeded, "random_regular: no simple connected pairing found");
}

}  // namespace sheafex
