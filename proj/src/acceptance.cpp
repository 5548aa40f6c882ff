#include "sheafex/acceptance.hpp"

#include "sheafex/buildings.hpp"
#include "sheafex/catalog.hpp"
#include "sheafex/codes.hpp"
#include "sheafex/cohomology.hpp"
#include "sheafex/spectral.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sheafex {
namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  std::string first_failure;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) first_failure = what;
    ok = ok && condition;
  }
};

std::string graph_label(const GraphSpec& s) {
  std::ostringstream os;
  os << "n=" << s.n << " [";
  for (std::size_t i = 0; i < s.edges.size(); ++i) os << (i ? " " : "") << s.edges[i].first << "-" << s.edges[i].second;
  os << "]";
  return os.str();
}

WeightedGraph bipartite_view(const GraphSpec& s, const std::vector<int>& colors) { return make_graph(s.n, s.edges, colors); }

// Random positive top-face weights summing to 1.
WeightedComplex random_weights(const WeightedGraph& g, CounterRng& rng) {
  std::vector<Rational> top;
  std::int64_t total = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto x = static_cast<std::int64_t>(1 + rng.below(9));
    top.emplace_back(x);
    total += x;
  }
  for (auto& w : top) w /= total;
  return weights_from_top(g.complex().shell(), top);
}

// ---- 1 ----
void constant_sheaf_values(Outcome& out) {
  const WeightedGraph k3 = complete_graph(3).weighted();
  const std::vector<std::pair<AbelianGroup, Rational>> cases = {
      {AbelianGroup::field(2, 1), Rational(2)},
      {AbelianGroup::cyclic({3}), Rational(3, 2)},
      {AbelianGroup::field(2, 2), Rational(3, 2)},
  };
  for (const auto& [r, expected] : cases) {
    const ExpansionResult res = cb0(constant_aug_sheaf(k3, r));
    out.require(res.exhaustive && !res.unconstrained && res.value == expected,
                r.describe() + " gave " + to_string(res.value));
    out.note << r.describe() << ":" << to_string(res.value) << " ";
  }
}

// ---- 2 ----
void building_spectra(Outcome& out) {
  double worst = 0.0;
  for (int q : {2, 3, 4}) {
    const WeightedGraph g(build_An(q, 2));
    const SpectrumReport s = spectrum(g);
    const double b = std::sqrt(static_cast<double>(q)) / (q + 1);
    const std::vector<double> targets = {1.0, -1.0, b, -b};
    std::vector<int> hits(targets.size(), 0);
    for (double ev : s.eigenvalues) {
      double best = 1e300;
      std::size_t arg = 0;
      for (std::size_t i = 0; i < targets.size(); ++i)
        if (std::abs(ev - targets[i]) < best) best = std::abs(ev - targets[i]), arg = i;
      worst = std::max(worst, best);
      ++hits[arg];
    }
    for (std::size_t i = 0; i < targets.size(); ++i)
      out.require(hits[i] > 0, "q=" + std::to_string(q) + " misses eigenvalue " + std::to_string(targets[i]));
  }
  out.require(worst <= 1e-9, "eigenvalue deviation " + std::to_string(worst));
  out.note << "max deviation " << worst;
}

// ---- 3 ----
void threshold_table(Outcome& out) {
  const std::map<std::string, int> expected = {{"A2", 29}, {"C2", 45}, {"G2", 78}, {"A3", 136}, {"C3", 257}};
  const auto rows = table77();
  out.require(rows.size() == expected.size(), "row count");
  for (const auto& row : rows) {
    const auto it = expected.find(row.type);
    out.require(it != expected.end() && it->second == row.threshold, row.type + " threshold " + std::to_string(row.threshold));
    if (it == expected.end()) continue;
    const CoxeterDiagram d = CoxeterDiagram::preset(row.type);
    const double at = corollary_bounds(it->second, d.r(), d.m()).cor76_refined;
    const double below = corollary_bounds(it->second - 1, d.r(), d.m()).cor76_refined;
    out.require(at > 0 && below <= 0, row.type + " sign flip not at " + std::to_string(it->second));
    out.note << row.type << ":" << row.threshold << " ";
  }
}

// ---- 4 ----
void sandwich(Outcome& out) {
  const std::vector<AbelianGroup> groups = {AbelianGroup::cyclic({2}), AbelianGroup::cyclic({3}), AbelianGroup::cyclic({4}),
                                            AbelianGroup::field(2, 2)};
  std::size_t checked = 0;
  for (const auto& spec : connected_catalog(6)) {
    const WeightedGraph g = spec.weighted();
    const CheegerResult ch = cheeger(g);
    for (const auto& r : groups) {
      const ExpansionResult res = cb0(constant_aug_sheaf(g, r));
      out.require(res.exhaustive && !res.unconstrained && ch.h_prime <= res.value && res.value <= ch.h,
                  graph_label(spec) + " over " + r.describe());
      ++checked;
    }
  }
  out.note << checked << " graph-group pairs";
}

// ---- 5 ----
void mixing(Outcome& out, CounterRng rng) {
  std::size_t graphs = 0, bip = 0;
  std::uint64_t pairs = 0;
  for (const auto& spec : connected_catalog(7)) {
    const WeightedGraph g = spec.weighted();
    const MixingReport r = eml_check(g, MixingOptions{});
    out.require(r.ok(), "mixing lemma on " + graph_label(spec));
    pairs += r.pairs;
    ++graphs;
    // K2 has no partite complement space, so there is no λ to test against.
    if (const auto colors = bipartition(g); colors && spec.n > 2) {
      MixingOptions opt;
      opt.exhaustive = false;
      opt.seed = rng.next();
      const MixingReport p = partite_eml_check(bipartite_view(spec, *colors), opt);
      out.require(p.ok() && p.pairs >= 2000, "partite mixing lemma on " + graph_label(spec));
      ++bip;
    }
  }
  MixingOptions opt;
  opt.exhaustive = false;
  opt.seed = rng.next();
  const MixingReport fano = partite_eml_check(WeightedGraph(build_An(2, 2)), opt);
  out.require(fano.ok() && fano.pairs >= 2000, "partite mixing lemma on A2(F2)");
  out.note << graphs << " graphs, " << pairs << " exhaustive pairs, " << bip + 1 << " partite instances";
}

// ---- 6 ----
void cheeger_inequalities(Outcome& out) {
  std::size_t n = 0;
  double worst = 1e300;
  for (const auto& spec : connected_catalog(8)) {
    const CheegerInequalityReport r = check_cheeger_inequality(spec.weighted());
    out.require(r.holds(1e-9), "Cheeger inequality on " + graph_label(spec));
    worst = std::min({worst, r.theorem_margin, r.converse_margin});
    ++n;
  }
  out.note << n << " graphs, smallest margin " << worst;
}

// ---- 7 ----
SubgroupAssignment random_assignment(const WeightedGraph& g, int k, CounterRng& rng) {
  const AbelianGroup r = AbelianGroup::field(2, k);
  SubgroupAssignment a = SubgroupAssignment::zero(r, g);
  const auto pick = [&]() {
    Element x(static_cast<std::size_t>(k));
    for (auto& c : x) c = static_cast<std::int64_t>(rng.coin());
    return x;
  };
  const int faces = g.vertex_count() + g.edge_count();
  const int nonzero = static_cast<int>(rng.below(static_cast<std::uint64_t>(k) + 1));
  for (int i = 0; i < nonzero; ++i) {
    const auto f = static_cast<int>(rng.below(static_cast<std::uint64_t>(faces)));
    auto& slot = f < g.vertex_count() ? a.vertex[static_cast<std::size_t>(f)] : a.edge[static_cast<std::size_t>(f - g.vertex_count())];
    slot.push_back(pick());
  }
  return a;
}

void quotient_bounds(Outcome& out, CounterRng rng) {
  const std::vector<GraphSpec> bases = {complete_graph(7), complete_graph(8)};
  int instances = 0, attempts = 0;
  Rational worst_gap = 1000;
  while (instances < 60 && attempts < 5000) {
    ++attempts;
    const GraphSpec& spec = bases[static_cast<std::size_t>(instances % 2)];
    const WeightedGraph g = spec.weighted();
    const int k = 1 + static_cast<int>(rng.below(3));
    const SubgroupAssignment a = random_assignment(g, k, rng);
    if (!check_conditions(g, a).ok()) continue;
    const TheoremBound bound = theorem_bound(theorem_inputs(g, &a, false));
    if (bound.value <= 0) continue;
    const ExpansionResult res = cb0(quotient_by_subgroups(g, a), std::nullopt, std::uint64_t{1} << 22);
    const bool ok = res.exhaustive && (res.unconstrained || to_double(res.value) >= bound.value);
    out.require(ok, "instance " + std::to_string(instances) + " on " + graph_label(spec) + ": cb0 " + to_string(res.value) +
                        " < " + std::to_string(bound.value));
    if (!res.unconstrained) worst_gap = std::min(worst_gap, res.value - Rational(bound.value));
    ++instances;
  }
  out.require(instances >= 50, "only " + std::to_string(instances) + " instances with a positive bound");
  out.note << instances << " instances, smallest cb0 - bound " << to_double(worst_gap);
}

// ---- 8 ----
void negative_controls(Outcome& out) {
  struct Twist {
    GraphSpec graph;
    int q, alpha;
  };
  const std::vector<Twist> twists = {{complete_graph(3), 3, 2}, {complete_graph(4), 3, 2}, {cycle_graph(5), 4, 2},
                                     {petersen_graph(), 3, 2}};
  for (const auto& t : twists) {
    const WeightedGraph g = t.graph.weighted();
    int e0 = 0;
    for (int e = 1; e < g.edge_count(); ++e)
      if (g.edge_weight(e) < g.edge_weight(e0)) e0 = e;
    const FiniteField field(t.q);
    const AugmentedSheaf f = locally_constant_twist(g, field, t.alpha, e0, g.edge(e0).u);
    const ExpansionResult res = cb0(f);
    out.require(res.exhaustive && !res.unconstrained && res.value <= g.edge_weight(e0),
                "twist on " + graph_label(t.graph) + " cb0 " + to_string(res.value));
    Cochain ones{0, {}};
    for (int v = 0; v < g.vertex_count(); ++v) ones.values.push_back(field.to_vector(1));
    const Cochain d = coboundary(f, ones);
    for (int e = 0; e < g.edge_count(); ++e)
      out.require(f.edge_group(e).is_zero(d.values[static_cast<std::size_t>(e)]) == (e != e0), "twist support");
    out.note << "twist " << to_string(res.value) << "<=" << to_string(g.edge_weight(e0)) << " ";
  }
  for (const auto& spec : {cycle_graph(5), complete_graph(4)}) {
    const WeightedGraph g = spec.weighted();
    const AbelianGroup v = AbelianGroup::field(2, 3);
    const AugmentedSheaf plain = constant_aug_sheaf(g, v);
    Cochain f{0, {}};
    for (int x = 0; x < g.vertex_count(); ++x) f.values.push_back(v.element(static_cast<std::uint64_t>(x + 1) % 8));
    const Cochain df = coboundary(plain, f);
    SubgroupAssignment a = SubgroupAssignment::zero(v, g);
    for (int e = 0; e < g.edge_count(); ++e) a.edge[static_cast<std::size_t>(e)] = {df.values[static_cast<std::size_t>(e)]};
    const AugmentedSheaf quo = quotient_by_subgroups(g, a);
    Cochain fq{0, {}};
    for (int x = 0; x < g.vertex_count(); ++x)
      fq.values.push_back(quo.vertex_group(x).normalize(f.values[static_cast<std::size_t>(x)]));
    const Rational norm = support_norm(quo, coboundary(quo, fq));
    const Rational dist = dist_to_B0(quo, fq).distance;
    const ExpansionResult res = cb0(quo);
    out.require(norm == 0 && dist > 0, "designated witness on " + graph_label(spec));
    out.require(res.exhaustive && !res.unconstrained && res.value == 0, "quotient cb0 " + to_string(res.value));
    out.note << "quotient " << to_string(res.value) << " (witness dist " << to_string(dist) << ") ";
  }
}

// ---- 9 ----
std::vector<Element> random_basis(int k, CounterRng& rng) {
  const AbelianGroup r = AbelianGroup::field(2, k);
  while (true) {
    std::vector<Element> cols;
    for (int i = 0; i < k; ++i) cols.push_back(r.element(rng.below(r.small_order())));
    if (r.subgroup_order(cols) == r.order()) return cols;
  }
}

void cycle_solver(Outcome& out, CounterRng rng) {
  const AbelianGroup r = AbelianGroup::field(2, 8);
  const auto all = r.elements();
  int solved = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int len = 3 + static_cast<int>(rng.below(6));
    const WeightedGraph g = cycle_graph(len).weighted();
    const auto basis = random_basis(8, rng);
    SubgroupAssignment a = SubgroupAssignment::zero(r, g);
    std::size_t next = 0;
    const int faces = 2 * len;
    std::vector<int> order(static_cast<std::size_t>(faces));
    std::iota(order.begin(), order.end(), 0);
    for (int i = faces - 1; i > 0; --i) std::swap(order[static_cast<std::size_t>(i)], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    for (int f : order) {
      const auto dim = static_cast<std::size_t>(rng.below(3));
      auto& slot = f < len ? a.vertex[static_cast<std::size_t>(f)] : a.edge[static_cast<std::size_t>(f - len)];
      for (std::size_t d = 0; d < dim && next < basis.size(); ++d) slot.push_back(basis[next++]);
    }
    const AugmentedSheaf sheaf = quotient_by_subgroups(g, a);
    const Element h = r.element(rng.below(256));
    Cochain f{0, {}};
    for (int v = 0; v < len; ++v) {
      const auto elems = r.subgroup_elements(a.vertex[static_cast<std::size_t>(v)]);
      const Element noise = elems[rng.below(elems.size())];
      f.values.push_back(sheaf.vertex_group(v).normalize(r.add(h, noise)));
    }
    std::vector<Element> valid;
    for (const auto& x : all) {
      bool ok = true;
      for (int v = 0; v < len && ok; ++v)
        ok = sheaf.vertex_group(v).normalize(x) == f.values[static_cast<std::size_t>(v)];
      if (ok) valid.push_back(x);
    }
    const Element got = solve_cycle_cocycle(g, a, f);
    const bool ok = valid.size() == 1 && valid.front() == got;
    out.require(ok, "cycle instance " + std::to_string(trial) + " of length " + std::to_string(len));
    solved += ok;
  }
  out.note << solved << "/100 match the exhaustive oracle";
}

// ---- 10 ----
void intro_code(Outcome& out, CounterRng rng) {
  const GraphSpec spec = random_regular(12, 5, rng);
  const WeightedGraph g = spec.weighted();
  const IntroLtc ltc = intro_ltc(g, 12);
  const SheafCode code = z0_code(ltc.sheaf);
  const Rational eta(1, 12);
  const Rational distance = code_distance(code);
  out.require(distance == 1 - eta, "relative distance " + to_string(distance));

  const LineForestResult lf = line_forest_min_ratio(g, ltc.assignment);
  out.require(lf.certified, "optimal forest not realized");

  // The witness re-evaluated as a tester input: rejection probability over distance to the code.
  std::vector<Element> word;
  for (int v = 0; v < g.vertex_count(); ++v)
    word.push_back(code.embeddings[static_cast<std::size_t>(v)].apply(lf.witness.values[static_cast<std::size_t>(v)]));
  const Rational reject = rejection_probability(code, word);
  Rational to_code = 1;
  for (const auto& c : code.codewords) {
    Rational d = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (c.values[static_cast<std::size_t>(v)] != lf.witness.values[static_cast<std::size_t>(v)]) d += g.vertex_weight(v);
    to_code = std::min(to_code, d);
  }
  out.require(to_code > 0 && reject / to_code == lf.value, "tester ratio at the witness " + to_string(reject / to_code));
  out.require(lf.distance == to_code && lf.coboundary_norm == reject, "cb0 and tester disagree at the witness");

  // Corollary claim: (C1) with the theorem's ε and (C2) with δ = 1 − η.
  const double eps = ltc.claim.value;
  out.require(eps <= to_double(lf.value), "C1 fails for the claimed epsilon");
  const CosystolicClaim claim = remark42_convert(lf.value, ltc.sheaf, std::uint64_t{1} << 13);
  out.require(claim.delta == 1 - eta, "coboundary delta " + to_string(claim.delta));
  Rational c2 = 1;
  const AugmentedSheaf plain = ltc.sheaf.deaugmented();
  for (const auto& c : code.codewords) {
    const Rational norm = support_norm(plain, c);
    if (norm > 0) c2 = std::min(c2, norm);
  }
  out.require(c2 >= 1 - eta, "C2 fails: " + to_string(c2));
  out.note << "distance " << to_string(distance) << ", soundness = cb0 = " << to_string(lf.value) << ", claimed eps "
           << eps << ", delta " << to_string(c2);
}

// ---- 11 ----
void weight_ratio(Outcome& out) {
  for (int q : {2, 3}) {
    const WeightedComplex x = build_An(q, 2);
    const Lemma75Report r = check_lemma75(x, thickness(x));
    out.require(r.holds(), "q=" + std::to_string(q) + " ratio " + to_string(r.max_ratio));
    if (q == 2) out.require(r.max_ratio == Rational(2, 3) && r.bound == Rational(2, 3), "Fano ratio " + to_string(r.max_ratio));
    out.note << "q=" << q << ": " << to_string(r.max_ratio) << "<=" << to_string(r.bound) << " ";
  }
}

// ---- 12 ----
bool in_class_span(const std::vector<Rational>& f, const std::vector<int>& cls, int classes, std::vector<Rational>& coef) {
  coef.assign(static_cast<std::size_t>(classes), Rational(-1));
  std::vector<bool> seen(static_cast<std::size_t>(classes), false);
  for (std::size_t v = 0; v < f.size(); ++v) {
    const auto c = static_cast<std::size_t>(cls[v]);
    if (!seen[c]) coef[c] = f[v], seen[c] = true;
    else if (coef[c] != f[v]) return false;
  }
  return true;
}

void partite_masses(Outcome& out, const WeightedGraph& g, const std::string& label) {
  const auto& cls = *g.partite();
  const int classes = g.class_count();
  const int r = classes - 1;
  std::vector<Rational> mass(static_cast<std::size_t>(classes), 0);
  for (int v = 0; v < g.vertex_count(); ++v) mass[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)])] += g.vertex_weight(v);
  for (const auto& m : mass) out.require(m == Rational(1, classes), label + " class mass " + to_string(m));
  std::map<std::pair<int, int>, Rational> between;
  for (int e = 0; e < g.edge_count(); ++e) {
    int a = cls[static_cast<std::size_t>(g.edge(e).u)], b = cls[static_cast<std::size_t>(g.edge(e).v)];
    if (a > b) std::swap(a, b);
    between[{a, b}] += g.edge_weight(e);
  }
  for (int a = 0; a < classes; ++a)
    for (int b = a + 1; b < classes; ++b)
      out.require(between[{a, b}] == Rational(2, r * classes), label + " edge mass between classes");
  // 𝒜 on the span of class indicators: trace 0 and M + I/r of rank 1.
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(classes));
  for (int i = 0; i < classes; ++i) {
    std::vector<Rational> ind(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v) ind[static_cast<std::size_t>(v)] = cls[static_cast<std::size_t>(v)] == i ? 1 : 0;
    std::vector<Rational> coef;
    out.require(in_class_span(adjacency_apply(g, ind), cls, classes, coef), label + " class span not invariant");
    for (int j = 0; j < classes; ++j) m[static_cast<std::size_t>(j)].push_back(coef[static_cast<std::size_t>(j)]);
  }
  Rational trace = 0;
  for (int i = 0; i < classes; ++i) {
    trace += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += Rational(1, r);
  }
  bool rank_one = true;
  for (int a = 0; a < classes; ++a)
    for (int b = 0; b < classes; ++b)
      for (int c = 0; c < classes; ++c)
        for (int d = 0; d < classes; ++d)
          rank_one = rank_one && m[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] * m[static_cast<std::size_t>(b)][static_cast<std::size_t>(d)] ==
                                     m[static_cast<std::size_t>(a)][static_cast<std::size_t>(d)] * m[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
  out.require(trace == 0 && rank_one, label + " eigenvalues on the class span");
  const SpectrumReport s = spectrum(g);
  int ones = 0, minus = 0;
  for (double ev : s.eigenvalues) {
    ones += std::abs(ev - 1.0) <= 1e-9;
    minus += std::abs(ev + 1.0 / r) <= 1e-9;
  }
  out.require(ones == 1 && minus == r, label + " eigenvalue multiplicities on the class span");
}

void symmetric_spectrum(Outcome& out, const WeightedGraph& g, const std::string& label) {
  const SpectrumReport s = spectrum(g);
  const auto& cls = *g.partite();
  const std::size_t n = s.eigenvalues.size();
  for (std::size_t i = 0; i < n; ++i)
    out.require(std::abs(s.eigenvalues[i] + s.eigenvalues[n - 1 - i]) <= 1e-9, label + " spectrum not symmetric");
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> flipped = s.eigenvectors[i];
    for (std::size_t v = 0; v < flipped.size(); ++v)
      if (cls[v] == 1) flipped[v] = -flipped[v];
    const auto af = adjacency_apply(g, flipped);
    double err = 0;
    for (std::size_t v = 0; v < af.size(); ++v) err = std::max(err, std::abs(af[v] + s.eigenvalues[i] * flipped[v]));
    out.require(err <= 1e-9, label + " flipped eigenvector");
  }
}

// Heaviest edge set all of whose cycles are longer than `girth_floor`, by branch and bound.
std::int64_t heaviest_high_girth(const WeightedGraph& g, const std::vector<std::int64_t>& w, int girth_floor) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return w[static_cast<std::size_t>(a)] > w[static_cast<std::size_t>(b)]; });
  std::vector<std::int64_t> suffix(static_cast<std::size_t>(m) + 1, 0);
  for (int i = m - 1; i >= 0; --i) suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1] + w[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  std::int64_t best = 0;
  const auto hop = [&](int s, int t) {
    std::uint32_t seen = 1u << s, frontier = 1u << s;
    for (int d = 1; frontier; ++d) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if (frontier >> v & 1) next |= adj[static_cast<std::size_t>(v)];
      next &= ~seen;
      if (next >> t & 1) return d;
      seen |= next;
      frontier = next;
    }
    return n + 1;
  };
  const auto go = [&](auto&& self, int i, std::int64_t acc) -> void {
    best = std::max(best, acc);
    if (i == m || acc + suffix[static_cast<std::size_t>(i)] <= best) return;
    const int e = order[static_cast<std::size_t>(i)];
    const int u = g.edge(e).u, v = g.edge(e).v;
    if (hop(u, v) >= girth_floor) {
      adj[static_cast<std::size_t>(u)] |= 1u << v;
      adj[static_cast<std::size_t>(v)] |= 1u << u;
      self(self, i + 1, acc + w[static_cast<std::size_t>(e)]);
      adj[static_cast<std::size_t>(u)] &= ~(1u << v);
      adj[static_cast<std::size_t>(v)] &= ~(1u << u);
    }
    self(self, i + 1, acc);
  };
  go(go, 0, 0);
  return best;
}

void subforest_weights(Outcome& out, const WeightedGraph& g, const std::string& label) {
  const IntegerWeights iw = integer_weights(g);
  const TsConstants ts = ts_constants(g);
  const Rational denom(iw.denominator);
  const int n = g.vertex_count();
  // Heaviest forest: girth floor above n means no cycle at all.
  const Rational forest = Rational(heaviest_high_girth(g, iw.edge, n + 1)) / denom;
  out.require(forest < ts.t, label + " forest weight reaches t");
  const int bound = (2 * n + 2) / 3;
  const Rational sparse = Rational(heaviest_high_girth(g, iw.edge, bound + 1)) / denom;
  out.require(sparse < ts.t + ts.s, label + " short-cycle-free weight reaches t+s");
}

void structural(Outcome& out, CounterRng rng) {
  std::size_t graphs = 0, partite = 0, bridgeless = 0;
  for (const auto& spec : connected_catalog(7)) {
    const std::string label = graph_label(spec);
    const WeightedGraph g = spec.weighted();
    const WeightedGraph gr(random_weights(g, rng));
    for (const WeightedGraph* x : {&g, &gr}) {
      out.require(validate_weights(x->complex()).ok(), label + " weight axioms");
      const int n = x->vertex_count();
      const std::vector<Rational> one(static_cast<std::size_t>(n), 1);
      out.require(adjacency_apply(*x, one) == one, label + " A1 != 1");
      std::vector<Rational> f, h;
      for (int v = 0; v < n; ++v) {
        f.emplace_back(static_cast<long>(rng.below(11)) - 5);
        h.emplace_back(static_cast<long>(rng.below(11)) - 5);
      }
      out.require(inner_product(*x, 0, adjacency_apply(*x, f), h) == inner_product(*x, 0, f, adjacency_apply(*x, h)),
                  label + " adjacency not self-adjoint");
      out.require(inner_product(*x, 0, laplacian_apply(*x, f), f) >= 0, label + " Laplacian not positive");
      const SpectrumReport s = spectrum(*x);
      out.require(s.eigenvalues.front() <= 1 + 1e-9 && s.eigenvalues.back() >= -1 - 1e-9 &&
                      std::abs(s.eigenvalues.front() - 1) <= 1e-9,
                  label + " spectrum outside [-1, 1]");
      subforest_weights(out, *x, label);
    }
    if (const auto colors = bipartition(g)) {
      const WeightedGraph b = bipartite_view(spec, *colors);
      out.require(validate_weights(b.complex()).ok(), label + " partite weight axioms");
      partite_masses(out, b, label);
      symmetric_spectrum(out, b, label);
      ++partite;
    }
    if (spec.n >= 3 && bridges(g).empty()) {
      out.require(3 * diameter(g) <= 2 * (spec.n - 1), label + " diameter above 2(n-1)/3");
      ++bridgeless;
    }
    ++graphs;
  }
  for (int n : {2, 3}) {
    const WeightedComplex x = build_An(2, n);
    out.require(validate_weights(x).ok(), "building weight axioms");
    const WeightedGraph g(skeleton(x, 1));
    partite_masses(out, g, "A" + std::to_string(n) + "(F2)");
    if (n == 2) symmetric_spectrum(out, g, "A2(F2)");
  }
  // Σαᵢ(1−αᵢ) ≥ Σ_{i≥1}αᵢ for α₀ ≥ max αᵢ and Σαᵢ ≤ 1.
  int trials = 0;
  for (int i = 0; i < 20000; ++i) {
    const int t = 1 + static_cast<int>(rng.below(8));
    const long scale = 1 + static_cast<long>(rng.below(1000));
    std::vector<Rational> alpha;
    Rational sum = 0;
    for (int j = 0; j <= t; ++j) {
      alpha.emplace_back(static_cast<long>(rng.below(static_cast<std::uint64_t>(scale) + 1)), scale * (t + 1));
      sum += alpha.back();
    }
    std::swap(alpha.front(), *std::max_element(alpha.begin(), alpha.end()));
    if (sum > 1) continue;
    Rational lhs = 0, rhs = 0;
    for (int j = 0; j <= t; ++j) {
      lhs += alpha[static_cast<std::size_t>(j)] * (1 - alpha[static_cast<std::size_t>(j)]);
      if (j > 0) rhs += alpha[static_cast<std::size_t>(j)];
    }
    out.require(lhs >= rhs, "arithmetic inequality");
    ++trials;
  }
  out.note << graphs << " graphs (2 weightings each), " << partite << " bipartite, " << bridgeless << " bridgeless, " << trials
           << " arithmetic trials";
}

struct Spec {
  const char* title;
  double limit;
};

const Spec kSpecs[kCriterionCount] = {
    {"constant sheaf on K3: cb0 = 2 over F2, 3/2 over Z/3 and F4", 1},
    {"A2(F_q) spectra for q = 2, 3, 4", 30},
    {"building thresholds 29, 45, 78, 136, 257", 1},
    {"h' <= cb0 <= h on all connected graphs with <= 6 vertices", 300},
    {"mixing lemmas on the catalog, A2(F2) and bipartite graphs", 300},
    {"Cheeger inequality and its converse on the catalog", 60},
    {"quotient sheaf bound against exhaustive cb0", 600},
    {"twist sheaf and degenerate quotient controls", 10},
    {"cycle cocycle solver against the exhaustive oracle", 60},
    {"intro code on a 5-regular graph with n = m = 12", 300},
    {"edge-vertex weight ratio on A2(F2), A2(F3)", 10},
    {"structural property suites", 300},
};

}  // namespace

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  CriterionResult res;
  res.id = id;
  if (id < 1 || id > kCriterionCount) throw Error(ErrorKind::InvalidInput, "unknown criterion " + std::to_string(id));
  res.title = kSpecs[id - 1].title;
  res.limit_seconds = kSpecs[id - 1].limit;
  const CounterRng rng = CounterRng(options.seed).fork(static_cast<std::uint64_t>(id));
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: constant_sheaf_values(out); break;
      case 2: building_spectra(out); break;
      case 3: threshold_table(out); break;
      case 4: sandwich(out); break;
      case 5: mixing(out, rng); break;
      case 6: cheeger_inequalities(out); break;
      case 7: quotient_bounds(out, rng); break;
      case 8: negative_controls(out); break;
      case 9: cycle_solver(out, rng); break;
      case 10: intro_code(out, rng); break;
      case 11: weight_ratio(out); break;
      case 12: structural(out, rng); break;
    }
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  res.checks_passed = out.ok;
  res.detail = out.ok ? out.note.str() : out.first_failure;
  return res;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options,
                                       const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end()) continue;
    out.push_back(run_criterion(id, options));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.title << "  (";
  os.setf(std::ios::fixed);
  os.precision(2);
  os << r.seconds << " s / " << r.limit_seconds << " s)";
  if (r.checks_passed && r.seconds > r.limit_seconds) os << "  over time";
  if (!r.detail.empty()) os << "  " << r.detail;
  return os.str();
}

}  // namespace sheafex
