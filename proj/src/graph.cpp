#include "sheafex/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace sheafex {

WeightedGraph::WeightedGraph(const WeightedComplex& x)
    : complex_(x.dimension() >= 1 ? skeleton(x, 1) : x) {
  if (complex_.dimension() != 1)
    throw Error(ErrorKind::BadDimension, "a graph needs a complex of dimension >= 1");
  const auto& vs = complex_.faces(0);
  vertex_weights_ = complex_.weights(0);
  incident_.resize(vs.size());
  const auto& es = complex_.faces(1);
  edge_weights_ = complex_.weights(1);
  edges_.reserve(es.size());
  for (std::size_t e = 0; e < es.size(); ++e) {
    edges_.push_back({es[e][0], es[e][1]});
    incident_[static_cast<std::size_t>(es[e][0])].emplace_back(es[e][1], static_cast<int>(e));
    incident_[static_cast<std::size_t>(es[e][1])].emplace_back(es[e][0], static_cast<int>(e));
  }
  for (auto& inc : incident_) std::sort(inc.begin(), inc.end());
}

int WeightedGraph::edge_between(int u, int v) const {
  const auto& inc = incident(u);
  auto it = std::lower_bound(inc.begin(), inc.end(), std::make_pair(v, -1));
  if (it == inc.end() || it->first != v) return -1;
  return it->second;
}

IntegerWeights integer_weights(const WeightedGraph& g) {
  constexpr std::int64_t kLimit = std::int64_t{1} << 40;
  BigInt lcm = 1;
  auto absorb = [&](const Rational& r) {
    const BigInt den = boost::multiprecision::denominator(r);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    if (lcm > kLimit) throw BudgetExceeded("common weight denominator exceeds 2^40", std::uint64_t(kLimit), 0);
  };
  for (const auto& w : g.vertex_weights()) absorb(w);
  for (const auto& w : g.edge_weights()) absorb(w);
  IntegerWeights out;
  out.denominator = lcm.convert_to<std::int64_t>();
  auto scale = [&](const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r) * (lcm / boost::multiprecision::denominator(r));
    return num.convert_to<std::int64_t>();
  };
  for (const auto& w : g.vertex_weights()) out.vertex.push_back(scale(w));
  for (const auto& w : g.edge_weights()) out.edge.push_back(scale(w));
  return out;
}

std::string padded_name(int i, int n) {
  const std::size_t width = std::to_string(std::max(n - 1, 0)).size();
  std::string s = std::to_string(i);
  return std::string(width - std::min(width, s.size()), '0') + s;
}

WeightedGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                         std::optional<std::vector<int>> partite) {
  std::vector<std::vector<std::string>> tops;
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw Error(ErrorKind::InvalidInput, "bad edge");
    tops.push_back({padded_name(u, n), padded_name(v, n)});
    covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = true;
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw Error(ErrorKind::InvalidInput, "isolated vertex: the complex would not be pure");
  return WeightedGraph(canonical_weights(Complex::build(tops), std::move(partite)));
}

namespace {

bool allowed(const EdgeMask* mask, int e) { return mask == nullptr || (*mask)[static_cast<std::size_t>(e)]; }

CyclePath make_path(const WeightedGraph& g, PathKind kind, const std::vector<int>& seq, bool closed) {
  CyclePath p;
  p.kind = kind;
  p.vertices = seq;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) p.edges.push_back(g.edge_between(seq[i], seq[i + 1]));
  if (closed) p.edges.push_back(g.edge_between(seq.back(), seq.front()));
  std::sort(p.edges.begin(), p.edges.end());
  return p;
}

void sort_paths(std::vector<CyclePath>& out) {
  std::sort(out.begin(), out.end(), [](const CyclePath& a, const CyclePath& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
}

}  // namespace

std::vector<CyclePath> enumerate_cycles(const WeightedGraph& g, int max_len, std::uint64_t cap,
                                        const EdgeMask* mask) {
  std::vector<CyclePath> out;
  const int n = g.vertex_count();
  std::vector<int> path;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  std::function<void(int)> extend = [&](int s) {
    const int x = path.back();
    for (auto [y, e] : g.incident(x)) {
      if (!allowed(mask, e)) continue;
      if (y == s && path.size() >= 3 && path[1] < x) {
        if (out.size() >= cap) throw BudgetExceeded("cycle enumeration", cap, out.size() + 1);
        out.push_back(make_path(g, PathKind::Cycle, path, true));
      }
      if (y <= s || on_path[static_cast<std::size_t>(y)] || static_cast<int>(path.size()) >= max_len) continue;
      on_path[static_cast<std::size_t>(y)] = true;
      path.push_back(y);
      extend(s);
      path.pop_back();
      on_path[static_cast<std::size_t>(y)] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path[static_cast<std::size_t>(s)] = true;
    extend(s);
    on_path[static_cast<std::size_t>(s)] = false;
  }
  sort_paths(out);
  return out;
}

std::vector<CyclePath> enumerate_short_paths(const WeightedGraph& g, int max_len, std::uint64_t cap) {
  if (max_len < 1) throw Error(ErrorKind::PreconditionViolated, "max_len must be >= 1");
  std::vector<CyclePath> out;
  const int n = g.vertex_count();
  std::vector<int> path;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  std::function<void()> extend = [&]() {
    const int x = path.back();
    for (auto [y, e] : g.incident(x)) {
      (void)e;
      if (on_path[static_cast<std::size_t>(y)]) continue;
      path.push_back(y);
      if (path.front() < y) {
        if (out.size() >= cap) throw BudgetExceeded("path enumeration", cap, out.size() + 1);
        out.push_back(make_path(g, PathKind::ClosedPath, path, false));
      }
      if (static_cast<int>(path.size()) <= max_len) {
        on_path[static_cast<std::size_t>(y)] = true;
        extend();
        on_path[static_cast<std::size_t>(y)] = false;
      }
      path.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path[static_cast<std::size_t>(s)] = true;
    extend();
    on_path[static_cast<std::size_t>(s)] = false;
  }
  sort_paths(out);
  return out;
}

TsConstants ts_constants(const WeightedGraph& g) {
  TsConstants c{Rational(0), Rational(0)};
  for (int e = 0; e < g.edge_count(); ++e) {
    const Rational& we = g.edge_weight(e);
    if (we > c.s) c.s = we;
    for (int x : {g.edge(e).u, g.edge(e).v}) {
      const Rational r = we / g.vertex_weight(x);
      if (r > c.t) c.t = r;
    }
  }
  return c;
}

std::vector<int> components(const WeightedGraph& g, const EdgeMask* mask) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    label[static_cast<std::size_t>(s)] = next;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (auto [y, e] : g.incident(x))
        if (allowed(mask, e) && label[static_cast<std::size_t>(y)] < 0) {
          label[static_cast<std::size_t>(y)] = next;
          stack.push_back(y);
        }
    }
    ++next;
  }
  return label;
}

bool is_connected(const WeightedGraph& g) {
  const auto label = components(g);
  return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

std::vector<int> bfs_distances(const WeightedGraph& g, int source, const EdgeMask* mask) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (auto [y, e] : g.incident(x))
      if (allowed(mask, e) && dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        q.push(y);
      }
  }
  return dist;
}

int diameter(const WeightedGraph& g) {
  int best = 0;
  for (int s = 0; s < g.vertex_count(); ++s)
    for (int d : bfs_distances(g, s)) best = std::max(best, d);
  return best;
}

std::vector<int> bridges(const WeightedGraph& g) {
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e) {
    EdgeMask mask(static_cast<std::size_t>(g.edge_count()), true);
    mask[static_cast<std::size_t>(e)] = false;
    if (bfs_distances(g, g.edge(e).u, &mask)[static_cast<std::size_t>(g.edge(e).v)] < 0) out.push_back(e);
  }
  return out;
}

std::optional<std::vector<int>> bipartition(const WeightedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (auto [y, e] : g.incident(x)) {
        (void)e;
        auto& cy = color[static_cast<std::size_t>(y)];
        if (cy < 0) {
          cy = 1 - color[static_cast<std::size_t>(x)];
          stack.push_back(y);
        } else if (cy == color[static_cast<std::size_t>(x)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace sheafex
