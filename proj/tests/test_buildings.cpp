#include "sheafex/buildings.hpp"
#include "sheafex/catalog.hpp"
#include "sheafex/graph.hpp"
#include "sheafex/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace sheafex;

namespace {

// Count k-subspaces of F_q^n as (q^n − 1)…(q^n − q^{k−1}) / (q^k − 1)…(q^k − q^{k−1}).
long long subspace_count(int n, int k, int q) {
  long long num = 1, den = 1, qn = 1, qk = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  for (int i = 0; i < k; ++i) qk *= q;
  long long qi = 1;
  for (int i = 0; i < k; ++i) {
    num *= qn - qi;
    den *= qk - qi;
    qi *= q;
  }
  return num / den;
}

}  // namespace

TEST_CASE("subspace enumeration") {
  for (int q : {2, 3, 4}) {
    const FiniteField f(q);
    for (int n = 1; n <= 3; ++n)
      for (int k = 0; k <= n; ++k) {
        const auto s = subspaces(f, n, k);
        CHECK(static_cast<long long>(s.size()) == subspace_count(n, k, q));
        CHECK(gaussian_binomial(n, k, q) == subspace_count(n, k, q));
        CHECK(std::set<Subspace>(s.begin(), s.end()).size() == s.size());
      }
  }
  const FiniteField f2(2);
  const Subspace line = span(f2, 3, {{1, 1, 0}});
  const Subspace plane = span(f2, 3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  CHECK(plane.dimension() == 2);
  CHECK(contains(f2, plane, line));
  CHECK_FALSE(contains(f2, line, plane));
}

TEST_CASE("A2 over F2 and F3") {
  const WeightedComplex fano = build_An(2, 2);
  CHECK(static_cast<long long>(fano.faces(0).size()) == 14);
  CHECK(static_cast<long long>(fano.faces(1).size()) == 21);
  CHECK(validate_weights(fano).ok());
  const WeightedGraph g(fano);
  for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 3);
  CHECK(bipartition(g).has_value());

  const WeightedComplex a3 = build_An(3, 2);
  CHECK(static_cast<long long>(a3.faces(0).size()) == 26);
  CHECK(static_cast<long long>(a3.faces(1).size()) == 52);
  CHECK(validate_weights(a3).ok());

  const WeightedComplex a32 = build_An(2, 3);
  CHECK(a32.dimension() == 2);
  CHECK(static_cast<long long>(a32.faces(0).size()) == subspace_count(4, 1, 2) + subspace_count(4, 2, 2) + subspace_count(4, 3, 2));
  CHECK(validate_weights(a32).ok());
}

TEST_CASE("thickness") {
  CHECK(thickness(build_An(2, 2)) == 3);
  CHECK(thickness(build_An(3, 2)) == 4);
  CHECK(thickness(canonical_weights(Complex::build({{"a", "b"}, {"b", "c"}}))) == 1);
  CHECK(thickness(canonical_weights(Complex::build({{"a", "b"}, {"b", "c"}, {"a", "c"}}))) == 2);
}

TEST_CASE("spectral bound for buildings") {
  CHECK(theorem72_bound(3, 1, 3) == doctest::Approx(1 / std::sqrt(3.0)));
  CHECK(theorem72_bound(3, 1, 3) >= std::sqrt(2.0) / 3);
  CHECK(theorem72_bound(7, 1, 2) == 0);
  CHECK(theorem72_bound(9, 2, 3) == doctest::Approx(0.5));
  CHECK_THROWS_AS(theorem72_bound(3, 2, 3), Error);
  const CoxeterDiagram g2 = CoxeterDiagram::preset("G2");
  CHECK(g2.m() == 6);
  CHECK(g2.r() == 1);
  CHECK(CoxeterDiagram::preset("A3").m() == 3);
  CHECK(CoxeterDiagram::preset("C3").m() == 4);
  CHECK_THROWS_AS(CoxeterDiagram::preset("E8"), Error);
}

TEST_CASE("corollary rows") {
  for (double q : {29.0, 50.0, 100.0}) {
    const CorollaryBounds b = corollary_bounds(q, 1, 3);
    CHECK(b.cor74 == doctest::Approx(1 - 1 / std::sqrt(q)));
    CHECK(b.cor76_refined == doctest::Approx(2.0 / 7 - 8 / (7 * std::sqrt(q)) - 2 / q));
  }
  CHECK(corollary_bounds(28, 1, 3).cor76_refined < 0);
  CHECK(corollary_bounds(29, 1, 3).cor76_refined > 0);
  const CorollaryBounds a3 = corollary_bounds(136, 2, 3);
  CHECK(a3.cor76_refined == doctest::Approx(1.0 / 3 - 10 / (3 * (std::sqrt(136.0) - 1)) - 8 / (3 * 137.0)));
  CHECK(a3.cor76_refined > 0);
  CHECK(corollary_bounds(135, 2, 3).cor76_refined <= 0);
  const auto rows = table77();
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].type == "A2");
  CHECK(rows[0].threshold == 29);
  CHECK(rows[2].threshold == 78);
  CHECK(table77_csv().find("A3") != std::string::npos);
}

TEST_CASE("edge to vertex weight ratios") {
  const Lemma75Report fano = check_lemma75(build_An(2, 2), 3);
  CHECK(fano.max_ratio == Rational(2, 3));
  CHECK(fano.slack == 0);
  const Lemma75Report a3 = check_lemma75(build_An(3, 2), 4);
  CHECK(a3.max_ratio <= Rational(1, 2));
  CHECK(a3.holds());
  const Lemma75Report k3 = check_lemma75(complete_graph(3).weighted().complex(), 2);
  CHECK(k3.max_ratio == 1);
  CHECK(k3.holds());
}
