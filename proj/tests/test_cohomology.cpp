#include "sheafex/catalog.hpp"
#include "sheafex/codes.hpp"
#include "sheafex/cohomology.hpp"
#include "sheafex/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <optional>

using namespace sheafex;

namespace {

Cochain indicator(const AugmentedSheaf& f, int v0) {
  Cochain c = zero_cochain(f, 0);
  c.values[static_cast<std::size_t>(v0)] = f.vertex_group(v0).element(1);
  return c;
}

// Naive cb₀: every 0-cochain against every h ∈ 𝓕(∅), with direct edge checks.
std::optional<Rational> naive_cb0(const AugmentedSheaf& f) {
  const WeightedGraph& g = f.graph();
  const int n = g.vertex_count();
  std::vector<std::vector<Element>> vals;
  for (int v = 0; v < n; ++v) vals.push_back(f.vertex_group(v).elements());
  std::vector<Cochain> b0;
  for (const auto& h : f.empty_group().elements()) {
    Cochain b{0, {}};
    for (int v = 0; v < n; ++v) b.values.push_back(f.res_vertex(v).apply(h));
    b0.push_back(b);
  }
  std::optional<Rational> best;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    Rational norm = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
      const int u = g.edge(e).u, v = g.edge(e).v;
      const Element a = f.res_edge(e, u).apply(vals[static_cast<std::size_t>(u)][pick[static_cast<std::size_t>(u)]]);
      const Element b = f.res_edge(e, v).apply(vals[static_cast<std::size_t>(v)][pick[static_cast<std::size_t>(v)]]);
      if (a != b) norm += g.edge_weight(e);
    }
    std::optional<Rational> dist;
    for (const auto& b : b0) {
      Rational d = 0;
      for (int v = 0; v < n; ++v)
        if (vals[static_cast<std::size_t>(v)][pick[static_cast<std::size_t>(v)]] != b.values[static_cast<std::size_t>(v)]) d += g.vertex_weight(v);
      if (!dist || d < *dist) dist = d;
    }
    if (*dist > 0 && (!best || norm / *dist < *best)) best = norm / *dist;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == vals[i].size()) pick[i++] = 0;
    if (i == pick.size()) return best;
  }
}

}  // namespace

TEST_CASE("coboundaries") {
  const WeightedGraph k3 = complete_graph(3).weighted();
  const AugmentedSheaf f = constant_aug_sheaf(k3, AbelianGroup::field(2, 1));
  Cochain ones = zero_cochain(f, 0);
  for (auto& x : ones.values) x = {1};
  CHECK(support_norm(f, coboundary(f, ones)) == 0);
  const Cochain d = coboundary(f, indicator(f, 0));
  int hit = 0;
  for (int e = 0; e < 3; ++e) {
    const bool at_a = k3.edge(e).u == 0 || k3.edge(e).v == 0;
    CHECK(f.edge_group(e).is_zero(d.values[static_cast<std::size_t>(e)]) != at_a);
    hit += at_a;
  }
  CHECK(hit == 2);
  CHECK(support_norm(f, d) == Rational(2, 3));

  Cochain h{-1, {{1}}};
  const Cochain dh = coboundary(f, h);
  CHECK(dh == ones);
  CHECK(support_norm(f, coboundary(f, dh)) == 0);

  Cochain bad = zero_cochain(f, 0);
  bad.values[0] = {1, 0};
  CHECK_THROWS_AS(coboundary(f, bad), Error);
}

TEST_CASE("cohomology orders") {
  const WeightedGraph k4 = complete_graph(4).weighted();
  const CohomologySummary c = cohomology_spaces(constant_aug_sheaf(k4, AbelianGroup::field(2, 1)));
  CHECK(c.b0_order == 2);
  CHECK(c.z0_order == 2);
  CHECK(c.h0_order == 1);
  CHECK(c.d0_after_dminus1_zero);

  // Two disjoint triangles carry a non-augmented Z⁰ of size 2².
  const WeightedGraph two = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const CohomologySummary d = cohomology_spaces(constant_sheaf(two, AbelianGroup::field(2, 1)));
  CHECK(d.b0_order == 1);
  CHECK(d.h0_order == 4);
  CHECK(z0_elements(constant_sheaf(two, AbelianGroup::field(2, 1))).size() == 4);

  const CohomologySummary z = cohomology_spaces(constant_aug_sheaf(k4, AbelianGroup::cyclic({6})));
  CHECK(z.h0_order == 1);
  CHECK(b0_elements(constant_aug_sheaf(k4, AbelianGroup::cyclic({6}))).size() == 6);
}

TEST_CASE("distance to coboundaries") {
  const WeightedGraph k3 = complete_graph(3).weighted();
  const AugmentedSheaf f = constant_aug_sheaf(k3, AbelianGroup::field(2, 1));
  const DistanceResult r = dist_to_B0(f, indicator(f, 0));
  CHECK(r.distance == Rational(1, 3));
  CHECK(r.nearest == zero_cochain(f, 0));
  Cochain ones = zero_cochain(f, 0);
  for (auto& x : ones.values) x = {1};
  CHECK(dist_to_B0(f, ones).distance == 0);
  const AugmentedSheaf plain = constant_sheaf(k3, AbelianGroup::field(2, 1));
  CHECK(dist_to_B0(plain, ones).distance == 1);
}

TEST_CASE("cb0 of constant sheaves on K3") {
  const WeightedGraph k3 = complete_graph(3).weighted();
  CHECK(cb0(constant_aug_sheaf(k3, AbelianGroup::field(2, 1))).value == 2);
  CHECK(cb0(constant_aug_sheaf(k3, AbelianGroup::cyclic({3}))).value == Rational(3, 2));
  CHECK(cb0(constant_aug_sheaf(k3, AbelianGroup::cyclic({5}))).value == Rational(3, 2));
  const ExpansionResult res = cb0(constant_aug_sheaf(k3, AbelianGroup::field(2, 1)));
  REQUIRE(res.witness);
  CHECK(res.coboundary_norm / res.distance == res.value);
  CHECK_THROWS_AS(cb0(constant_aug_sheaf(complete_graph(5).weighted(), AbelianGroup::cyclic({16})), std::nullopt, 1000),
                  BudgetExceeded);
}

TEST_CASE("cb0 agrees with a naive scan") {
  CounterRng rng(21);
  const AbelianGroup r = AbelianGroup::field(2, 3);
  std::size_t compared = 0;
  const auto catalog = connected_catalog(5);
  for (const auto& spec : catalog) {
    const WeightedGraph g = spec.weighted();
    SubgroupAssignment a = SubgroupAssignment::zero(r, g);
    for (auto& s : a.vertex)
      if (rng.coin()) s = {r.element(1 + rng.below(7))};
    for (auto& s : a.edge)
      if (rng.below(4) == 0) s = {r.element(1 + rng.below(7))};
    const AugmentedSheaf f = quotient_by_subgroups(g, a);
    const ExpansionResult res = cb0(f);
    const auto naive = naive_cb0(f);
    CHECK(res.unconstrained == !naive.has_value());
    if (naive) CHECK(res.value == *naive);
    ++compared;
  }
  CHECK(compared == catalog.size());
}

TEST_CASE("sampled cb0 is an upper bound") {
  const AugmentedSheaf f = constant_aug_sheaf(petersen_graph().weighted(), AbelianGroup::field(2, 1));
  const ExpansionResult exact = cb0(f);
  const ExpansionResult sampled = cb0(f, SampleSpec{5, 2000});
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.value >= exact.value);
}

TEST_CASE("cosystolic expansion") {
  for (const auto& spec : {complete_graph(4), cycle_graph(5), path_graph(4)}) {
    const WeightedGraph g = spec.weighted();
    const CosystolicReport r = cosystolic_check(constant_aug_sheaf(g, AbelianGroup::field(2, 1)), 0.1, 0.5);
    CHECK(r.epsilon_max >= cheeger(g).h_prime);
    CHECK(r.delta_vacuous);
    CHECK(r.holds());
  }
  const WeightedGraph c4 = cycle_graph(4).weighted();
  const IntroLtc ltc = intro_ltc(c4, 4);
  const CosystolicReport q = cosystolic_check(ltc.sheaf.deaugmented(), 0.0, 0.7);
  CHECK_FALSE(q.delta_vacuous);
  CHECK(q.delta_max >= Rational(3, 4));
  CHECK(q.c2_holds);
}

TEST_CASE("theorem bound arithmetic") {
  const TheoremBound b = theorem_bound({0.1, -0.1, 0.01, 0.005, std::nullopt, false});
  CHECK(b.value == doctest::Approx(0.2375).epsilon(1e-12));
  for (int k : {10, 20, 50}) {
    const double rho = 0.05, t = 2.0 / k;
    const TheoremBound plain = theorem_bound({rho, rho, t, 1.0, std::nullopt, true});
    CHECK(plain.value == doctest::Approx((2 - 8 * rho - 10.0 / k) / (5 - 2 * rho)).epsilon(1e-12));
    CHECK(plain.value >= 0.4 - 1.6 * rho - 2.0 / k - 1e-12);
    const TheoremBound partite = theorem_bound({rho, rho, t, 1.0, 1, true});
    CHECK(partite.value == doctest::Approx((2 - 8 * rho - 14.0 / k) / (7 - 2 * rho)).epsilon(1e-12));
    CHECK(partite.value >= 2.0 / 7 - 8.0 / 7 * rho - 2.0 / k - 1e-12);
  }
  CHECK_THROWS_AS(theorem_bound({-0.2, 0.1, 0, 0, std::nullopt, false}), Error);
  CHECK_THROWS_AS(theorem_bound({0.1, 0.1, 0, 0, 0, false}), Error);
  CHECK_THROWS_AS(theorem_bound({-1.5, -1.5, 0, 0, 1, false}), Error);
}

TEST_CASE("theorem inputs on a regular graph") {
  const WeightedGraph pet = petersen_graph().weighted();
  const TheoremInputs in = theorem_inputs(pet, nullptr, false);
  CHECK(in.t == doctest::Approx(2.0 / 3));
  CHECK(in.s_elided);
  // Petersen adjacency spectrum {3, 1, −2} divided by the degree.
  CHECK(in.lambda == doctest::Approx(1.0 / 3).epsilon(1e-9));
  CHECK(in.mu == doctest::Approx(-2.0 / 3).epsilon(1e-9));
}

TEST_CASE("cycle cocycles are telescoped to a point of R") {
  const WeightedGraph c5 = cycle_graph(5).weighted();
  const AbelianGroup r = AbelianGroup::field(2, 4);
  const SubgroupAssignment zero = SubgroupAssignment::zero(r, c5);
  const AugmentedSheaf plain = quotient_by_subgroups(c5, zero);
  Cochain f = zero_cochain(plain, 0);
  for (auto& x : f.values) x = {1, 0, 1, 1};
  CHECK(solve_cycle_cocycle(c5, zero, f) == Element{1, 0, 1, 1});

  SubgroupAssignment a = SubgroupAssignment::zero(r, c5);
  a.vertex[0] = {{1, 0, 0, 0}};
  a.vertex[2] = {{0, 1, 0, 0}};
  a.edge[3] = {{0, 0, 1, 0}};
  const AugmentedSheaf q = quotient_by_subgroups(c5, a);
  const Element h = {0, 1, 1, 1};
  Cochain g = zero_cochain(q, 0);
  for (int v = 0; v < 5; ++v) g.values[static_cast<std::size_t>(v)] = q.vertex_group(v).normalize(h);
  g.values[0] = q.vertex_group(0).normalize(r.add(h, {1, 0, 0, 0}));
  CHECK(solve_cycle_cocycle(c5, a, g) == h);

  Cochain broken = g;
  broken.values[4] = q.vertex_group(4).normalize({1, 1, 1, 1});
  CHECK_THROWS_AS(solve_cycle_cocycle(c5, a, broken), Error);
  SubgroupAssignment overlap = a;
  overlap.vertex[1] = {{1, 0, 0, 0}};
  CHECK_THROWS_AS(solve_cycle_cocycle(c5, overlap, g), Error);
}

TEST_CASE("coboundary expansion converted to a cosystolic claim") {
  const WeightedGraph k4 = complete_graph(4).weighted();
  const CosystolicClaim c = remark42_convert(Rational(1), constant_aug_sheaf(k4, AbelianGroup::field(2, 2)));
  CHECK(c.delta == 1);
  CHECK(c.epsilon == 1);
  CHECK_FALSE(c.vacuous);
  const CosystolicClaim v = remark42_convert(Rational(1), constant_sheaf(k4, AbelianGroup::field(2, 2)));
  CHECK(v.vacuous);
  CHECK(v.delta == 0);
  const WeightedGraph c6 = cycle_graph(6).weighted();
  const CosystolicClaim q = remark42_convert(Rational(1, 2), intro_ltc(c6, 6).sheaf);
  CHECK(q.delta == Rational(5, 6));
}
