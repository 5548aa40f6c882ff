#include "sheafex/catalog.hpp"
#include "sheafex/codes.hpp"

#include <doctest.h>

using namespace sheafex;

TEST_CASE("codes of constant and twisted sheaves") {
  const WeightedGraph k4 = complete_graph(4).weighted();
  const SheafCode c = z0_code(constant_sheaf(k4, AbelianGroup::field(2, 2)));
  CHECK(c.size == 4);
  CHECK(c.codewords.size() == 4);
  for (const auto& w : c.codewords)
    for (const auto& x : w.values) CHECK(x == w.values[0]);
  CHECK(code_distance(c) == 1);
  REQUIRE(code_rate(c).exact);
  CHECK(*code_rate(c).exact == Rational(1, 4));

  const SheafCode t = z0_code(locally_constant_twist(k4, FiniteField(3), 2, 0, k4.edge(0).u));
  CHECK(t.size == 1);
  CHECK(code_rate(t).value == 0);
  CHECK(code_distance(t) == 1);
}

TEST_CASE("intro construction rates and distances") {
  const WeightedGraph c6 = cycle_graph(6).weighted();
  const IntroLtc full = intro_ltc(c6, 6);
  CHECK(check_conditions(c6, full.assignment).ok());
  for (int v = 0; v < 6; ++v) CHECK(full.sheaf.vertex_group(v).order() == 32);
  const SheafCode a = z0_code(full.sheaf);
  CHECK(a.alphabet.order() == 32);
  CHECK(a.size == 64);
  CHECK(*code_rate(a).exact == Rational(1, 5));
  CHECK(code_distance(a) == Rational(5, 6));

  const IntroLtc part = intro_ltc(c6, 4);
  CHECK(check_conditions(c6, part.assignment).ok());
  const SheafCode b = z0_code(part.sheaf);
  CHECK(b.alphabet.order() == 16);
  CHECK(*code_rate(b).exact == Rational(1, 6));
  CHECK(code_distance(b) == Rational(5, 6));

  // Not the constant-word code.
  bool non_constant = false;
  for (const auto& w : a.codewords)
    for (const auto& x : w.values) non_constant = non_constant || x != w.values[0];
  CHECK(non_constant);

  CHECK_THROWS_AS(intro_ltc(path_graph(3).weighted(), 2), Error);
  CHECK_THROWS_AS(intro_ltc(c6, 7), Error);
}

TEST_CASE("tester completeness and soundness") {
  const WeightedGraph c4 = cycle_graph(4).weighted();
  const IntroLtc ltc = intro_ltc(c4, 4);
  const SheafCode code = z0_code(ltc.sheaf);
  for (const auto& w : code.codewords) CHECK(rejection_probability(code, code.embed(w)) == 0);

  const TesterReport t = tester_metrics(code);
  CHECK(t.exhaustive);
  CHECK_FALSE(t.soundness_unconstrained);
  CHECK(t.distance == Rational(3, 4));
  const CosystolicReport cs = cosystolic_check(ltc.sheaf, 0.0, 0.0);
  CHECK(t.soundness == cs.epsilon_max);
  CHECK(t.soundness == cb0(ltc.sheaf).value);

  REQUIRE(t.witness);
  const Cochain w = from_word(ltc.sheaf, *t.witness);
  CHECK_FALSE(code.contains(w));
  CHECK(rejection_probability(code, code.embed(w)) > 0);

  const TesterReport sampled = tester_metrics(code, SampleSpec{2, 3000});
  CHECK(sampled.soundness >= t.soundness);
}

TEST_CASE("line forest program matches exhaustive cb0") {
  for (const auto& [spec, m] : std::vector<std::pair<GraphSpec, int>>{{cycle_graph(4), 4},
                                                                       {cycle_graph(5), 5},
                                                                       {complete_graph(4), 4},
                                                                       {complete_graph(5), 3},
                                                                       {cycle_graph(6), 4},
                                                                       {complete_bipartite(3, 3), 3}}) {
    const WeightedGraph g = spec.weighted();
    const IntroLtc ltc = intro_ltc(g, m);
    const LineForestResult lf = line_forest_min_ratio(g, ltc.assignment);
    const ExpansionResult ex = cb0(ltc.sheaf);
    CHECK(lf.value == ex.value);
    CHECK(lf.certified);
    CHECK(support_norm(ltc.sheaf, coboundary(ltc.sheaf, lf.witness)) == lf.coboundary_norm);
    CHECK(dist_to_B0(ltc.sheaf, lf.witness).distance == lf.distance);
  }
}

TEST_CASE("line forest preconditions") {
  const WeightedGraph p3 = path_graph(3).weighted();
  const AbelianGroup r = AbelianGroup::field(2, 3);
  SubgroupAssignment a = SubgroupAssignment::zero(r, p3);
  CHECK_THROWS_AS(line_forest_min_ratio(p3, a), Error);

  const WeightedGraph c4 = cycle_graph(4).weighted();
  SubgroupAssignment big = SubgroupAssignment::zero(r, c4);
  big.vertex[0] = {{1, 0, 0}, {0, 1, 0}};
  CHECK_THROWS_AS(line_forest_min_ratio(c4, big), Error);
  SubgroupAssignment edge = SubgroupAssignment::zero(r, c4);
  edge.edge[0] = {{1, 0, 0}};
  CHECK_THROWS_AS(line_forest_min_ratio(c4, edge), Error);
  SubgroupAssignment shared = SubgroupAssignment::zero(r, c4);
  shared.vertex[0] = {{1, 0, 0}};
  shared.vertex[1] = {{1, 0, 0}};
  CHECK_THROWS_AS(line_forest_min_ratio(c4, shared), Error);
}
