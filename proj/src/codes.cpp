#include "sheafex/codes.hpp"

#include "sheafex/error.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <limits>
#include <map>
#include <set>

namespace sheafex {

namespace {

std::vector<Homomorphism> packed_embeddings(const AugmentedSheaf& f, AbelianGroup& sigma) {
  const int n = f.graph().vertex_count();
  std::optional<int> p;
  for (int v = 0; v < n; ++v) {
    const auto& pv = f.vertex_group(v).prime();
    if (!pv || (p && *p != *pv)) throw Error(ErrorKind::EmbeddingInvalid, "canonical embedding needs one prime field backend");
    p = pv;
  }
  std::vector<std::vector<std::size_t>> free(static_cast<std::size_t>(n));
  std::size_t k = 0;
  for (int v = 0; v < n; ++v) {
    const auto& steps = f.vertex_group(v).relations().steps();
    for (std::size_t c = 0; c < steps.size(); ++c)
      if (steps[c] > 1) free[static_cast<std::size_t>(v)].push_back(c);
    k = std::max(k, free[static_cast<std::size_t>(v)].size());
  }
  sigma = AbelianGroup::field(p ? *p : 2, static_cast<int>(k));
  std::vector<Homomorphism> out;
  for (int v = 0; v < n; ++v) {
    const AbelianGroup& g = f.vertex_group(v);
    const auto& fr = free[static_cast<std::size_t>(v)];
    std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(static_cast<std::size_t>(g.rank()), 0));
    for (std::size_t i = 0; i < static_cast<std::size_t>(g.rank()); ++i) {
      Element unit = g.zero();
      unit[i] = 1;
      const Element red = g.normalize(unit);
      for (std::size_t t = 0; t < fr.size(); ++t) m[t][i] = red[fr[t]];
    }
    out.emplace_back(g, sigma, std::move(m));
  }
  return out;
}

std::optional<int> power_of(BigInt x, int p) {
  if (x < 1) return std::nullopt;
  int e = 0;
  while (x > 1) {
    if (x % p != 0) return std::nullopt;
    x /= p;
    ++e;
  }
  return e;
}

double log_of(const BigInt& x) { return std::log(x.convert_to<long double>()); }

}  // namespace

bool SheafCode::contains(const Cochain& c) const {
  return std::find(codewords.begin(), codewords.end(), c) != codewords.end();
}

std::vector<Element> SheafCode::embed(const Cochain& c) const {
  std::vector<Element> out;
  for (std::size_t v = 0; v < c.values.size(); ++v) out.push_back(embeddings[v].apply(c.values[v]));
  return out;
}

SheafCode z0_code(const AugmentedSheaf& f, std::optional<AbelianGroup> alphabet,
                  std::optional<std::vector<Homomorphism>> embeddings, std::uint64_t budget) {
  const int n = f.graph().vertex_count();
  AbelianGroup sigma;
  std::vector<Homomorphism> maps;
  if (embeddings) {
    if (!alphabet) throw Error(ErrorKind::EmbeddingInvalid, "explicit embeddings need an alphabet");
    sigma = *alphabet;
    maps = std::move(*embeddings);
  } else if (alphabet) {
    throw Error(ErrorKind::EmbeddingInvalid, "an explicit alphabet needs explicit embeddings");
  } else if (f.vertex_group(0).prime()) {
    maps = packed_embeddings(f, sigma);
  } else {
    sigma = f.vertex_group(0);
    for (int v = 0; v < n; ++v) {
      const AbelianGroup& g = f.vertex_group(v);
      if (!(g == sigma) || g.relations().order() != 1)
        throw Error(ErrorKind::EmbeddingInvalid, "cyclic backend needs explicit embeddings unless all vertex groups agree");
      maps.push_back(Homomorphism::identity(g));
    }
  }
  if (static_cast<int>(maps.size()) != n) throw Error(ErrorKind::EmbeddingInvalid, "one embedding per vertex is required");
  for (int v = 0; v < n; ++v) {
    const Homomorphism& h = maps[static_cast<std::size_t>(v)];
    if (!(h.source() == f.vertex_group(v)) || !(h.target() == sigma))
      throw Error(ErrorKind::EmbeddingInvalid, "embedding at vertex " + std::to_string(v) + " has the wrong source or target");
    if (h.kernel(budget).size() != 1)
      throw Error(ErrorKind::EmbeddingInvalid, "embedding at vertex " + std::to_string(v) + " is not injective");
  }
  SheafCode code{f, sigma, std::move(maps), z0_elements(f, budget), 0};
  code.size = code.codewords.size();
  return code;
}

Rational rejection_probability(const SheafCode& code, const std::vector<Element>& word) {
  const AugmentedSheaf& f = code.sheaf;
  const WeightedGraph& g = f.graph();
  // Preimage of a Σ-value at vertex v, if any.
  auto read = [&](int v) -> std::optional<Element> {
    const AbelianGroup& src = f.vertex_group(v);
    const Element target = code.alphabet.normalize(word[static_cast<std::size_t>(v)]);
    for (const auto& x : src.elements())
      if (code.embeddings[static_cast<std::size_t>(v)].apply(x) == target) return x;
    return std::nullopt;
  };
  std::vector<std::optional<Element>> vals;
  for (int v = 0; v < g.vertex_count(); ++v) vals.push_back(read(v));
  Rational p = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const auto& a = vals[static_cast<std::size_t>(ed.u)];
    const auto& b = vals[static_cast<std::size_t>(ed.v)];
    if (!a || !b || f.res_minus(e).apply(*a) != f.res_plus(e).apply(*b)) p += g.edge_weight(e);
  }
  return p;
}

CodeRate code_rate(const SheafCode& code) {
  CodeRate out;
  const int n = code.sheaf.graph().vertex_count();
  const BigInt sigma = code.alphabet.order();
  out.value = sigma > 1 ? log_of(code.size) / (n * log_of(sigma)) : 0.0;
  if (code.alphabet.prime()) {
    const auto a = power_of(code.size, *code.alphabet.prime());
    const auto b = power_of(sigma, *code.alphabet.prime());
    if (a && b && *b > 0) out.exact = Rational(*a, static_cast<long>(n) * *b);
  }
  return out;
}

Rational code_distance(const SheafCode& code) {
  Rational out = 1;
  for (const auto& c : code.codewords) {
    const Rational norm = support_norm(code.sheaf, c);
    if (norm > 0 && norm < out) out = norm;
  }
  return out;
}

TesterReport tester_metrics(const SheafCode& code, std::optional<SampleSpec> sampled, bool over_alphabet,
                            std::uint64_t budget) {
  const AugmentedSheaf& f = code.sheaf;
  const WeightedGraph& g = f.graph();
  const int n = g.vertex_count();
  TesterReport rep;
  rep.exhaustive = !sampled;
  rep.over_alphabet = over_alphabet;

  const CodeRate rate = code_rate(code);
  rep.rate = rate.value;
  rep.rate_exact = rate.exact;

  rep.distance = code_distance(code);

  WordSpace space;
  std::vector<Word> sub;
  if (!over_alphabet) {
    space = word_space(f);
    for (const auto& c : code.codewords) sub.push_back(to_word(f, c));
  } else {
    const std::uint64_t size = code.alphabet.small_order();
    for (int v = 0; v < n; ++v) space.domain.push_back(code.alphabet);
    std::vector<std::vector<std::optional<Element>>> pre(static_cast<std::size_t>(n), std::vector<std::optional<Element>>(size));
    for (int v = 0; v < n; ++v)
      for (const auto& x : f.vertex_group(v).elements(budget))
        pre[static_cast<std::size_t>(v)][code.alphabet.index(code.embeddings[static_cast<std::size_t>(v)].apply(x))] = x;
    for (int e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      std::vector<std::uint32_t> minus(size, kReject), plus(size, kReject);
      for (std::uint64_t s = 0; s < size; ++s) {
        if (const auto& x = pre[static_cast<std::size_t>(ed.u)][s])
          minus[s] = static_cast<std::uint32_t>(f.edge_group(e).index(f.res_minus(e).apply(*x)));
        if (const auto& y = pre[static_cast<std::size_t>(ed.v)][s])
          plus[s] = static_cast<std::uint32_t>(f.edge_group(e).index(f.res_plus(e).apply(*y)));
      }
      space.minus.push_back(std::move(minus));
      space.plus.push_back(std::move(plus));
    }
    for (const auto& c : code.codewords) {
      Word w;
      for (const auto& s : code.embed(c)) w.push_back(code.alphabet.index(s));
      sub.push_back(std::move(w));
    }
  }
  const RatioSearch r = min_ratio(g, space, sub, sampled, budget);
  rep.evaluated = r.evaluated;
  rep.soundness_unconstrained = r.unconstrained;
  if (!r.unconstrained) {
    rep.soundness = r.value;
    rep.witness = r.witness;
    rep.nearest = r.nearest;
  }
  return rep;
}

namespace {

constexpr std::int64_t kNeg = std::numeric_limits<std::int64_t>::min() / 4;

// Subset dynamic program over forests of cosets for one agreement cap.
class ForestProgram {
 public:
  ForestProgram(int n, std::vector<std::int64_t> sat, std::vector<char> point_vertex)
      : n_(n), full_((1u << n) - 1), sat_(std::move(sat)), point_(std::move(point_vertex)) {
    tern_.assign(std::size_t{1} << n, 0);
    std::uint64_t p3 = 1;
    std::vector<std::uint64_t> pow3(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i, p3 *= 3) pow3[static_cast<std::size_t>(i)] = p3;
    for (std::uint32_t m = 1; m <= full_; ++m)
      tern_[m] = tern_[m & (m - 1)] + pow3[static_cast<std::size_t>(std::countr_zero(m))];
    by_size_.resize(static_cast<std::size_t>(n + 1));
    for (std::uint32_t m = 0; m <= full_; ++m) by_size_[static_cast<std::size_t>(std::popcount(m))].push_back(m);
    hub_.assign(p3, kNeg);
    best_.assign(static_cast<std::size_t>(n) << n, kNeg);
  }

  // Largest satisfied weight over forests whose points carry at most `cap` cosets.
  std::int64_t solve(int cap) {
    cap_ = cap;
    std::fill(hub_.begin(), hub_.end(), kNeg);
    std::fill(best_.begin(), best_.end(), kNeg);
    hub_[0] = 0;
    for (int k = 0; k <= n_; ++k) {
      for (std::uint32_t u : by_size_[static_cast<std::size_t>(k)]) {
        for (std::uint32_t c = u; c; c = (c - 1) & u) hub_[index(c, u & ~c)] = hub_value(c, u & ~c);
        for (int v = 0; v < n_; ++v)
          if (!(u >> v & 1)) best_at(v, u) = below_value(v, u);
      }
    }
    std::vector<std::int64_t> forest(std::size_t{full_} + 1, kNeg);
    forest[0] = 0;
    for (std::uint32_t x = 1; x <= full_; ++x) {
      const std::uint32_t low = x & (~x + 1);
      const std::uint32_t rest = x & ~low;
      for (std::uint32_t y = rest;; y = (y - 1) & rest) {
        const std::uint32_t tree = y | low;
        const std::int64_t t = tree_value(tree);
        if (t > kNeg && forest[x & ~tree] > kNeg) forest[x] = std::max(forest[x], t + forest[x & ~tree]);
        if (y == 0) break;
      }
    }
    forest_ = std::move(forest);
    return forest_[full_];
  }

  // Hubs (vertex sets sharing a point) of an optimal forest, and per tree the
  // parent structure: for each vertex, the hub index of its upper and lower points.
  struct Layout {
    std::vector<std::uint32_t> hubs;
    std::vector<int> upper, lower;  // hub index or -1 for a private leaf point
    std::vector<int> tree_of_hub;
  };

  Layout reconstruct() const {
    Layout out;
    out.upper.assign(static_cast<std::size_t>(n_), -1);
    out.lower.assign(static_cast<std::size_t>(n_), -1);
    std::uint32_t x = full_;
    int tree = 0;
    while (x) {
      const std::uint32_t low = x & (~x + 1);
      const std::uint32_t rest = x & ~low;
      for (std::uint32_t y = rest;; y = (y - 1) & rest) {
        const std::uint32_t t = y | low;
        const std::int64_t tv = tree_value(t);
        if (tv > kNeg && forest_[x & ~t] > kNeg && tv + forest_[x & ~t] == forest_[x]) {
          unfold_tree(t, tree++, out);
          x &= ~t;
          break;
        }
        if (y == 0) throw Error(ErrorKind::InvalidInput, "forest reconstruction failed");
      }
    }
    return out;
  }

 private:
  std::size_t index(std::uint32_t c, std::uint32_t r) const { return tern_[c] + 2 * tern_[r]; }
  std::int64_t& best_at(int v, std::uint32_t t) { return best_[(static_cast<std::size_t>(v) << n_) | t]; }
  std::int64_t best_get(int v, std::uint32_t t) const { return best_[(static_cast<std::size_t>(v) << n_) | t]; }

  // Children C hang their subtrees on a partition of R.
  std::int64_t hub_value(std::uint32_t c, std::uint32_t r) const {
    const int first = std::countr_zero(c);
    const std::uint32_t others = c & (c - 1);
    std::int64_t out = kNeg;
    for (std::uint32_t s = r;; s = (s - 1) & r) {
      const std::int64_t a = best_get(first, s);
      const std::int64_t b = hub_[index(others, r & ~s)];
      if (a > kNeg && b > kNeg) out = std::max(out, a + b);
      if (s == 0) break;
    }
    return out;
  }

  // Vertex v entered from its upper point; T is everything hanging below it.
  std::int64_t below_value(int v, std::uint32_t t) const {
    if (t == 0) return 0;
    if (point_[static_cast<std::size_t>(v)]) return kNeg;
    std::int64_t out = kNeg;
    for (std::uint32_t c = t; c; c = (c - 1) & t) {
      if (std::popcount(c) > cap_ - 1) continue;
      const std::int64_t h = hub_[index(c, t & ~c)];
      if (h > kNeg) out = std::max(out, sat_[c | (1u << v)] + h);
    }
    return out;
  }

  std::int64_t tree_value(std::uint32_t y) const {
    std::int64_t out = kNeg;
    for (std::uint32_t c = y; c; c = (c - 1) & y) {
      if (std::popcount(c) > cap_) continue;
      const std::int64_t h = hub_[index(c, y & ~c)];
      if (h > kNeg) out = std::max(out, sat_[c] + h);
    }
    return out;
  }

  void unfold_hub(std::uint32_t c, std::uint32_t r, int hub, Layout& out) const {
    // Members of C sit on `hub` (their upper point) and split R among their subtrees.
    while (c) {
      const int first = std::countr_zero(c);
      const std::uint32_t others = c & (c - 1);
      const std::int64_t target = hub_[index(c, r)];
      for (std::uint32_t s = r;; s = (s - 1) & r) {
        const std::int64_t a = best_get(first, s);
        const std::int64_t b = hub_[index(others, r & ~s)];
        if (a > kNeg && b > kNeg && a + b == target) {
          out.upper[static_cast<std::size_t>(first)] = hub;
          unfold_below(first, s, out);
          r &= ~s;
          break;
        }
        if (s == 0) throw Error(ErrorKind::InvalidInput, "hub reconstruction failed");
      }
      c = others;
    }
  }

  void unfold_below(int v, std::uint32_t t, Layout& out) const {
    if (t == 0) return;
    const std::int64_t target = best_get(v, t);
    for (std::uint32_t c = t; c; c = (c - 1) & t) {
      if (std::popcount(c) > cap_ - 1) continue;
      const std::int64_t h = hub_[index(c, t & ~c)];
      if (h > kNeg && sat_[c | (1u << v)] + h == target) {
        const int hub = static_cast<int>(out.hubs.size());
        out.hubs.push_back(c | (1u << v));
        out.tree_of_hub.push_back(out.tree_of_hub.empty() ? 0 : out.tree_of_hub.back());
        out.lower[static_cast<std::size_t>(v)] = hub;
        unfold_hub(c, t & ~c, hub, out);
        return;
      }
    }
    throw Error(ErrorKind::InvalidInput, "subtree reconstruction failed");
  }

  void unfold_tree(std::uint32_t y, int tree, Layout& out) const {
    const std::int64_t target = tree_value(y);
    for (std::uint32_t c = y; c; c = (c - 1) & y) {
      if (std::popcount(c) > cap_) continue;
      const std::int64_t h = hub_[index(c, y & ~c)];
      if (h > kNeg && sat_[c] + h == target) {
        const int hub = static_cast<int>(out.hubs.size());
        out.hubs.push_back(c);
        out.tree_of_hub.push_back(tree);
        const std::size_t before = out.hubs.size();
        unfold_hub(c, y & ~c, hub, out);
        for (std::size_t i = before; i < out.hubs.size(); ++i) out.tree_of_hub[i] = tree;
        return;
      }
    }
    throw Error(ErrorKind::InvalidInput, "tree reconstruction failed");
  }

  int n_;
  std::uint32_t full_;
  int cap_ = 1;
  std::vector<std::int64_t> sat_;
  std::vector<char> point_;
  std::vector<std::uint64_t> tern_;
  std::vector<std::vector<std::uint32_t>> by_size_;
  std::vector<std::int64_t> hub_;
  std::vector<std::int64_t> best_;
  std::vector<std::int64_t> forest_;
};

}  // namespace

LineForestResult line_forest_min_ratio(const WeightedGraph& g, const SubgroupAssignment& assignment,
                                       std::uint64_t budget) {
  const int n = g.vertex_count();
  if (n < 2 || n > 13) throw Error(ErrorKind::PreconditionViolated, "line forest program needs 2 <= n <= 13");
  assignment.validate(g);
  const AbelianGroup& r = assignment.ambient;
  std::vector<char> point(static_cast<std::size_t>(n), 0);
  std::vector<Element> gen(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const auto elems = r.subgroup_elements(assignment.vertex[static_cast<std::size_t>(v)]);
    if (elems.size() > 2) throw Error(ErrorKind::PreconditionViolated, "vertex subgroups must have order <= 2");
    point[static_cast<std::size_t>(v)] = elems.size() == 1;
    if (elems.size() == 2) gen[static_cast<std::size_t>(v)] = elems[1];
    if (g.vertex_weight(v) != g.vertex_weight(0)) throw Error(ErrorKind::PreconditionViolated, "vertex weights must be uniform");
  }
  for (const auto& e : assignment.edge)
    if (r.subgroup_order(e) != 1) throw Error(ErrorKind::PreconditionViolated, "edge subgroups must be zero");
  if (!check_linear_disjoint(r, assignment.vertex).disjoint)
    throw Error(ErrorKind::PreconditionViolated, "vertex subgroups must be linearly disjoint");

  const IntegerWeights iw = integer_weights(g);
  std::vector<std::int64_t> sat(std::size_t{1} << n, 0);
  std::int64_t total = 0;
  for (int e = 0; e < g.edge_count(); ++e) total += iw.edge[static_cast<std::size_t>(e)];
  for (std::uint32_t m = 1; m < (1u << n); ++m)
    for (int e = 0; e < g.edge_count(); ++e)
      if ((m >> g.edge(e).u & 1) && (m >> g.edge(e).v & 1)) sat[m] += iw.edge[static_cast<std::size_t>(e)];
  const std::int64_t wv = iw.vertex[0];

  ForestProgram program(n, std::move(sat), point);
  LineForestResult best;
  std::int64_t best_u = 0, best_k = 0;
  int best_cap = 0;
  for (int cap = 1; cap < n; ++cap) {
    const std::int64_t u = total - program.solve(cap);
    const std::int64_t k = static_cast<std::int64_t>(n - cap) * wv;
    if (best_cap == 0 || static_cast<__int128>(u) * best_k < static_cast<__int128>(best_u) * k) {
      best_u = u;
      best_k = k;
      best_cap = cap;
    }
  }
  program.solve(best_cap);
  const ForestProgram::Layout layout = program.reconstruct();
  best.value = Rational(best_u, best_k);

  // Realize: points per hub, translated tree by tree to avoid collisions.
  const std::size_t hubs = layout.hubs.size();
  std::vector<std::optional<Element>> hub_point(hubs);
  std::vector<Element> upper(static_cast<std::size_t>(n)), lower(static_cast<std::size_t>(n));
  std::set<Element> used;
  const int trees = hubs ? layout.tree_of_hub.back() + 1 : 0;
  bool realized = true;
  for (int t = 0; t < trees && realized; ++t) {
    // Relative coordinates from the root hub of tree t.
    std::vector<std::optional<Element>> rel(hubs);
    std::size_t root = 0;
    while (layout.tree_of_hub[root] != t) ++root;
    rel[root] = r.zero();
    bool grown = true;
    while (grown) {
      grown = false;
      for (int v = 0; v < n; ++v) {
        const int a = layout.upper[static_cast<std::size_t>(v)], b = layout.lower[static_cast<std::size_t>(v)];
        if (a < 0 || b < 0 || layout.tree_of_hub[static_cast<std::size_t>(a)] != t) continue;
        if (rel[static_cast<std::size_t>(a)] && !rel[static_cast<std::size_t>(b)]) {
          rel[static_cast<std::size_t>(b)] = r.add(*rel[static_cast<std::size_t>(a)], gen[static_cast<std::size_t>(v)]);
          grown = true;
        }
      }
    }
    std::vector<Element> pts;
    for (std::size_t h = 0; h < hubs; ++h)
      if (layout.tree_of_hub[h] == t) pts.push_back(*rel[h]);
    for (int v = 0; v < n; ++v) {
      const int a = layout.upper[static_cast<std::size_t>(v)];
      if (a >= 0 && layout.tree_of_hub[static_cast<std::size_t>(a)] == t && layout.lower[static_cast<std::size_t>(v)] < 0 &&
          !point[static_cast<std::size_t>(v)])
        pts.push_back(r.add(*rel[static_cast<std::size_t>(a)], gen[static_cast<std::size_t>(v)]));
    }
    realized = false;
    for (const auto& offset : r.elements(budget)) {
      bool clash = false;
      for (const auto& p : pts) clash = clash || used.count(r.add(p, offset));
      if (clash) continue;
      for (std::size_t h = 0; h < hubs; ++h)
        if (layout.tree_of_hub[h] == t) hub_point[h] = r.add(*rel[h], offset);
      for (const auto& p : pts) used.insert(r.add(p, offset));
      realized = true;
      break;
    }
  }
  for (int v = 0; v < n && realized; ++v) {
    const int a = layout.upper[static_cast<std::size_t>(v)];
    upper[static_cast<std::size_t>(v)] = *hub_point[static_cast<std::size_t>(a)];
  }

  for (auto h : layout.hubs) {
    if (std::popcount(h) < 2) continue;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (h >> v & 1) members.push_back(v);
    best.hubs.push_back(std::move(members));
  }
  best.max_agreement = best_cap;
  if (!realized) return best;

  const AugmentedSheaf sheaf = quotient_by_subgroups(g, assignment);
  Cochain f{0, {}};
  for (int v = 0; v < n; ++v) f.values.push_back(sheaf.vertex_group(v).normalize(upper[static_cast<std::size_t>(v)]));
  best.witness = f;
  best.coboundary_norm = support_norm(sheaf, coboundary(sheaf, f));
  best.distance = dist_to_B0(sheaf, f, budget).distance;
  best.certified = best.distance > 0 && best.coboundary_norm / best.distance == best.value;
  if (best.certified) best.max_agreement = n - static_cast<int>((best.distance / g.vertex_weight(0)).convert_to<double>() + 0.5);
  return best;
}

IntroLtc intro_ltc(const WeightedGraph& g, int m) {
  const int n = g.vertex_count();
  if (m < 1 || m > n) throw Error(ErrorKind::PreconditionViolated, "need 1 <= m <= n");
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != g.degree(0)) throw Error(ErrorKind::PreconditionViolated, "graph is not regular");
    if (g.vertex_weight(v) != Rational(1, n)) throw Error(ErrorKind::PreconditionViolated, "weights are not canonical");
  }
  SubgroupAssignment a = SubgroupAssignment::zero(AbelianGroup::field(2, m), g);
  for (int i = 0; i < m; ++i) {
    Element e(static_cast<std::size_t>(m), 0);
    e[static_cast<std::size_t>(i)] = 1;
    a.vertex[static_cast<std::size_t>(i)] = {e};
  }
  const bool partite = g.partite() && g.class_count() >= 2;
  TheoremBound claim = theorem_bound(theorem_inputs(g, &a, partite));
  AugmentedSheaf sheaf = quotient_by_subgroups(g, a);
  return IntroLtc{std::move(a), std::move(sheaf), std::move(claim)};
}

}  // namespace sheafex
