#include "sheafex/field.hpp"
#include "sheafex/group.hpp"
#include "sheafex/rng.hpp"

#include <doctest.h>

#include <set>

using namespace sheafex;

namespace {

// Disjointness by direct search for a nonzero tuple summing to zero.
bool brute_disjoint(const AbelianGroup& g, const std::vector<std::vector<Element>>& gens) {
  std::vector<std::vector<Element>> sets;
  for (const auto& s : gens) sets.push_back(g.subgroup_elements(s));
  std::vector<std::size_t> pick(sets.size(), 0);
  while (true) {
    Element sum = g.zero();
    bool all_zero = true;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      sum = g.add(sum, sets[i][pick[i]]);
      all_zero = all_zero && g.is_zero(sets[i][pick[i]]);
    }
    if (!all_zero && g.is_zero(sum)) return false;
    std::size_t i = 0;
    while (i < sets.size() && ++pick[i] == sets[i].size()) pick[i++] = 0;
    if (i == sets.size()) return true;
  }
}

}  // namespace

TEST_CASE("group axioms on small groups") {
  const std::vector<AbelianGroup> groups = {AbelianGroup::field(2, 3), AbelianGroup::field(3, 2),
                                            AbelianGroup::cyclic({4, 6}), AbelianGroup::cyclic({9})};
  for (const auto& g : groups) {
    const auto xs = g.elements();
    CHECK(BigInt(xs.size()) == g.order());
    for (const auto& a : xs) {
      CHECK(g.add(a, g.zero()) == a);
      CHECK(g.is_zero(g.add(a, g.neg(a))));
      CHECK(g.scale(g.element_order(a), a) == g.zero());
      for (const auto& b : xs) {
        CHECK(g.add(a, b) == g.add(b, a));
        CHECK(g.sub(g.add(a, b), b) == a);
      }
    }
  }
}

TEST_CASE("element indexing is a bijection") {
  const AbelianGroup g = AbelianGroup::cyclic({2, 3, 4});
  CHECK(g.order() == 24);
  std::set<Element> seen;
  for (std::uint64_t i = 0; i < 24; ++i) {
    const Element x = g.element(i);
    CHECK(g.index(x) == i);
    seen.insert(x);
  }
  CHECK(seen.size() == 24);
  CHECK_THROWS_AS(g.elements(10), BudgetExceeded);
}

TEST_CASE("quotients and subgroup orders") {
  const AbelianGroup z12 = AbelianGroup::cyclic({12});
  CHECK(z12.subgroup_order({{4}}) == 3);
  CHECK(z12.subgroup_order({{4}, {6}}) == 6);
  const AbelianGroup q = z12.quotient({{4}});
  CHECK(q.order() == 4);
  CHECK(q.is_zero(q.normalize({8})));
  CHECK_FALSE(q.is_zero(q.normalize({2})));
  const AbelianGroup f = AbelianGroup::field(2, 3);
  CHECK(f.quotient({{1, 1, 0}}).order() == 4);
  CHECK(f.in_subgroup({{1, 1, 0}, {0, 1, 1}}, {1, 0, 1}));
  CHECK_FALSE(f.in_subgroup({{1, 1, 0}, {0, 1, 1}}, {1, 0, 0}));
  CHECK_THROWS_AS(f.normalize({1, 0}), Error);
}

TEST_CASE("homomorphisms are linear and compose") {
  const AbelianGroup a = AbelianGroup::cyclic({6});
  const AbelianGroup b = AbelianGroup::cyclic({3});
  const Homomorphism f(a, b, {{1}});
  const Homomorphism g(b, b, {{2}});
  for (const auto& x : a.elements())
    for (const auto& y : a.elements()) CHECK(f.apply(a.add(x, y)) == b.add(f.apply(x), f.apply(y)));
  const Homomorphism h = f.then(g);
  for (const auto& x : a.elements()) CHECK(h.apply(x) == g.apply(f.apply(x)));
  CHECK(f.kernel().size() == 2);
  // Z/3 → Z/6 by 1 does not respect 3·1 = 0.
  CHECK_THROWS_AS(Homomorphism(b, a, {{1}}), Error);
  CHECK(Homomorphism::identity(a).same_map(Homomorphism(a, a, {{7}})));
}

TEST_CASE("linear disjointness agrees with a direct search") {
  const AbelianGroup f = AbelianGroup::field(2, 3);
  CHECK(check_linear_disjoint(f, {{{1, 0, 0}}, {{0, 1, 0}}, {{0, 0, 1}}}).disjoint);
  const DisjointnessReport bad = check_linear_disjoint(f, {{{1, 0, 0}}, {{0, 1, 0}}, {{1, 1, 0}}});
  CHECK_FALSE(bad.disjoint);
  CHECK(bad.first_overlap == 2);
  REQUIRE(bad.certificate);
  Element sum = f.zero();
  for (const auto& r : *bad.certificate) sum = f.add(sum, r);
  CHECK(f.is_zero(sum));

  const AbelianGroup z = AbelianGroup::cyclic({4, 2});
  CounterRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const AbelianGroup& g = trial % 2 ? f : z;
    std::vector<std::vector<Element>> gens(2 + rng.below(2));
    for (auto& s : gens) {
      Element x = g.zero();
      for (int c = 0; c < g.rank(); ++c) x[static_cast<std::size_t>(c)] = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(g.moduli()[static_cast<std::size_t>(c)])));
      s.push_back(g.normalize(x));
    }
    CHECK(check_linear_disjoint(g, gens).disjoint == brute_disjoint(g, gens));
  }
}

TEST_CASE("finite field axioms for q = 4, 8, 9") {
  for (int q : {4, 8, 9}) {
    const FiniteField k(q);
    for (int a = 0; a < q; ++a) {
      CHECK(k.add(a, k.neg(a)) == 0);
      CHECK(k.mul(a, 1) == a);
      if (a) CHECK(k.mul(a, k.inv(a)) == 1);
      CHECK(k.from_vector(k.to_vector(a)) == a);
      for (int b = 0; b < q; ++b) {
        CHECK(k.mul(a, b) == k.mul(b, a));
        for (int c = 0; c < q; ++c) CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
      }
    }
    std::set<int> powers;
    for (int i = 0; i < q - 1; ++i) powers.insert(k.pow(k.primitive_element(), static_cast<std::uint64_t>(i)));
    CHECK(powers.size() == static_cast<std::size_t>(q - 1));
  }
  CHECK_THROWS_AS(FiniteField(6), Error);
  CHECK_FALSE(prime_power(12).has_value());
  CHECK(prime_power(27) == std::make_pair(3, 3));
}
