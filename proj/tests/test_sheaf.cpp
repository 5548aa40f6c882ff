#include "sheafex/catalog.hpp"
#include "sheafex/codes.hpp"
#include "sheafex/cohomology.hpp"
#include "sheafex/sheaf.hpp"
#include "sheafex/sheaf_io.hpp"

#include <doctest.h>

using namespace sheafex;

namespace {

// R_e spanned by (d₀f)(e) for f(v) = element v+1 of F₂³, R_v = 0.
SubgroupAssignment degenerate_assignment(const WeightedGraph& g, const AbelianGroup& v) {
  const AugmentedSheaf plain = constant_aug_sheaf(g, v);
  Cochain f{0, {}};
  for (int x = 0; x < g.vertex_count(); ++x) f.values.push_back(v.element(static_cast<std::uint64_t>(x + 1) % 8));
  const Cochain df = coboundary(plain, f);
  SubgroupAssignment a = SubgroupAssignment::zero(v, g);
  for (int e = 0; e < g.edge_count(); ++e) a.edge[static_cast<std::size_t>(e)] = {df.values[static_cast<std::size_t>(e)]};
  return a;
}

}  // namespace

TEST_CASE("constant sheaves") {
  const WeightedGraph k3 = complete_graph(3).weighted();
  const AugmentedSheaf f = constant_aug_sheaf(k3, AbelianGroup::field(2, 1));
  CHECK(f.is_augmented());
  for (int v = 0; v < 3; ++v) CHECK(f.vertex_group(v).order() == 2);
  for (int e = 0; e < 3; ++e) CHECK(f.edge_group(e).order() == 2);
  CHECK(composition_violations(f).empty());

  const WeightedGraph p3 = path_graph(3).weighted();
  const AugmentedSheaf z3 = constant_aug_sheaf(p3, AbelianGroup::cyclic({3}));
  for (int v = 0; v < 3; ++v) CHECK(z3.vertex_group(v).order() == 3);
  CHECK(z3.res_minus(0).same_map(Homomorphism::identity(AbelianGroup::cyclic({3}))));

  const AugmentedSheaf plain = constant_sheaf(k3, AbelianGroup::field(2, 1));
  CHECK_FALSE(plain.is_augmented());
  CHECK(composition_violations(plain).empty());
  CHECK(f.deaugmented().empty_group().order() == 1);
}

TEST_CASE("composition law violations are detected") {
  const WeightedGraph k2 = path_graph(2).weighted();
  const AbelianGroup r = AbelianGroup::field(3, 1);
  const Homomorphism id = Homomorphism::identity(r);
  const Homomorphism twice(r, r, {{2}});
  const AugmentedSheaf bad(k2, r, {r, r}, {r}, {id, id}, {id}, {twice}, {id});
  const auto v = composition_violations(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].edge == 0);
}

TEST_CASE("locally constant twist") {
  const WeightedGraph k3 = complete_graph(3).weighted();
  const FiniteField f3(3);
  const AugmentedSheaf f = locally_constant_twist(k3, f3, 2, 0, k3.edge(0).u);
  CHECK(composition_violations(f).empty());
  CHECK(cohomology_spaces(f).z0_order == 1);
  Cochain ones{0, {}};
  for (int v = 0; v < 3; ++v) ones.values.push_back(f3.to_vector(1));
  const Cochain d = coboundary(f, ones);
  CHECK_FALSE(f.edge_group(0).is_zero(d.values[0]));
  CHECK(f.edge_group(1).is_zero(d.values[1]));
  CHECK(f.edge_group(2).is_zero(d.values[2]));

  CHECK_THROWS_AS(locally_constant_twist(k3, FiniteField(2), 1, 0, 0), Error);
  CHECK_THROWS_AS(locally_constant_twist(k3, f3, 1, 0, k3.edge(0).u), Error);
  CHECK_THROWS_AS(locally_constant_twist(path_graph(3).weighted(), f3, 2, 0, 0), Error);
  const WeightedGraph c4 = cycle_graph(4).weighted();
  int not_endpoint = 0;
  while (not_endpoint == c4.edge(0).u || not_endpoint == c4.edge(0).v) ++not_endpoint;
  CHECK_THROWS_AS(locally_constant_twist(c4, f3, 2, 0, not_endpoint), Error);
}

TEST_CASE("quotients by subgroup assignments") {
  const WeightedGraph p3 = path_graph(3).weighted();
  const AbelianGroup r = AbelianGroup::field(2, 3);
  const AugmentedSheaf same = quotient_by_subgroups(p3, SubgroupAssignment::zero(r, p3));
  for (int v = 0; v < 3; ++v) CHECK(same.vertex_group(v).order() == 8);
  CHECK(same.empty_group().order() == 8);

  SubgroupAssignment full = SubgroupAssignment::zero(r, p3);
  for (auto& s : full.vertex) s = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const AugmentedSheaf zero = quotient_by_subgroups(p3, full);
  for (int v = 0; v < 3; ++v) CHECK(zero.vertex_group(v).order() == 1);
  for (int e = 0; e < 2; ++e) CHECK(zero.edge_group(e).order() == 1);

  SubgroupAssignment a = SubgroupAssignment::zero(r, p3);
  a.vertex[0] = {{1, 0, 0}};
  a.vertex[2] = {{0, 1, 0}, {1, 1, 0}};
  a.edge[1] = {{0, 0, 1}};
  const AugmentedSheaf q = quotient_by_subgroups(p3, a);
  CHECK(composition_violations(q).empty());
  for (int v = 0; v < 3; ++v)
    CHECK(q.vertex_group(v).order() * r.subgroup_order(a.vertex[static_cast<std::size_t>(v)]) == r.order());
  CHECK(q.edge_group(1).order() == 1);

  SubgroupAssignment wrong = SubgroupAssignment::zero(r, p3);
  wrong.vertex[0] = {{1, 0}};
  CHECK_THROWS_AS(quotient_by_subgroups(p3, wrong), Error);
}

TEST_CASE("degenerate quotient has a cocycle off the coboundaries") {
  const WeightedGraph k4 = complete_graph(4).weighted();
  const AbelianGroup v = AbelianGroup::field(2, 3);
  const AugmentedSheaf q = quotient_by_subgroups(k4, degenerate_assignment(k4, v));
  const CohomologySummary c = cohomology_spaces(q);
  CHECK(c.z0_order > c.b0_order);
}

TEST_CASE("theorem conditions") {
  const WeightedGraph pet = petersen_graph().weighted();
  const AbelianGroup r = AbelianGroup::field(2, 10);
  const ConditionReport zero = check_conditions(pet, SubgroupAssignment::zero(r, pet));
  CHECK(zero.ok());
  CHECK(zero.cycle_bound == 7);

  const IntroLtc ltc = intro_ltc(pet, 10);
  CHECK(check_conditions(pet, ltc.assignment).ok());

  const WeightedGraph k4 = complete_graph(4).weighted();
  const ConditionReport bad = check_conditions(k4, degenerate_assignment(k4, AbelianGroup::field(2, 3)));
  CHECK_FALSE(bad.condition1);
  REQUIRE(bad.first_violation1);
  CHECK(bad.first_violation1->edges.size() == 3);
  CHECK(bad.condition2);

  SubgroupAssignment shared = SubgroupAssignment::zero(AbelianGroup::field(2, 3), k4);
  shared.vertex[0] = {{1, 0, 0}};
  shared.vertex[3] = {{1, 0, 0}, {0, 1, 0}};
  const ConditionReport overlap = check_conditions(k4, shared);
  CHECK_FALSE(overlap.condition2);
  REQUIRE(overlap.first_violation2);
  CHECK(*overlap.first_violation2 == std::make_pair(0, 3));

  const ConditionReport weak = check_conditions(pet, SubgroupAssignment::zero(r, pet), 5);
  CHECK(weak.hypothesis_weakened);
}

TEST_CASE("sheaf spec files round-trip") {
  const WeightedGraph k4 = complete_graph(4).weighted();
  const SubgroupAssignment a = degenerate_assignment(k4, AbelianGroup::field(2, 3));
  const nlohmann::json j = assignment_to_json(a, k4);
  const SubgroupAssignment b = assignment_from_json(j, k4);
  CHECK(b.ambient == a.ambient);
  CHECK(assignment_to_json(b, k4) == j);
  CHECK(ambient_from_json(ambient_to_json(AbelianGroup::cyclic({4, 6}))) == AbelianGroup::cyclic({4, 6}));
}
