#include "sheafex/buildings.hpp"
#include "sheafex/catalog.hpp"
#include "sheafex/spectral.hpp"

#include <doctest.h>

#include <cmath>

using namespace sheafex;

namespace {

struct BruteCheeger {
  Rational h, h_prime;
};

// Direct subset scan, independent of the Gray-code implementation.
BruteCheeger brute_cheeger(const WeightedGraph& g) {
  const int n = g.vertex_count();
  BruteCheeger out{Rational(1000), Rational(1000)};
  for (std::uint32_t s = 1; s + 1 < (1u << n); ++s) {
    Rational ws = 0, cut = 0;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) ws += g.vertex_weight(v);
    for (int e = 0; e < g.edge_count(); ++e)
      if ((s >> g.edge(e).u & 1) != (s >> g.edge(e).v & 1)) cut += g.edge_weight(e);
    const Rational wc = 1 - ws;
    out.h = std::min(out.h, Rational(cut / std::min(ws, wc)));
    out.h_prime = std::min(out.h_prime, Rational(cut / (2 * ws * wc)));
  }
  return out;
}

std::vector<Rational> rationals(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("adjacency and Laplacian by hand") {
  const WeightedGraph k3 = complete_graph(3).weighted();
  CHECK(adjacency_apply(k3, rationals({1, 0, 0})) == std::vector<Rational>{0, Rational(1, 2), Rational(1, 2)});
  CHECK(laplacian_apply(k3, rationals({1, 0, 0})) == std::vector<Rational>{1, Rational(-1, 2), Rational(-1, 2)});
  const WeightedGraph p3 = path_graph(3).weighted();
  CHECK(adjacency_apply(p3, rationals({1, -1, 1})) == rationals({-1, 1, -1}));
  for (const auto& spec : connected_catalog(5)) {
    const WeightedGraph g = spec.weighted();
    const std::vector<Rational> one(static_cast<std::size_t>(g.vertex_count()), 1);
    CHECK(adjacency_apply(g, one) == one);
    CHECK(laplacian_apply(g, one) == std::vector<Rational>(one.size(), 0));
  }
}

TEST_CASE("Laplacian quadratic form equals the coboundary norm") {
  // ⟨Δf, f⟩ = ½ Σ_e w(e) (f(u) − f(v))², with ⟨f,g⟩ = Σ_x w(x) f(x) g(x).
  CounterRng rng(3);
  for (const auto& spec : connected_catalog(5)) {
    const WeightedGraph g = spec.weighted();
    std::vector<Rational> f;
    for (int v = 0; v < g.vertex_count(); ++v) f.emplace_back(static_cast<long>(rng.below(7)) - 3);
    Rational edge_form = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
      const Rational d = f[static_cast<std::size_t>(g.edge(e).u)] - f[static_cast<std::size_t>(g.edge(e).v)];
      edge_form += g.edge_weight(e) * d * d;
    }
    CHECK(inner_product(g, 0, laplacian_apply(g, f), f) == edge_form / 2);
  }
}

TEST_CASE("complete graph spectrum") {
  for (int n = 3; n <= 8; ++n) {
    const SpectrumReport s = spectrum(complete_graph(n).weighted());
    CHECK(s.eigenvalues.front() == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 1; i < s.eigenvalues.size(); ++i)
      CHECK(std::abs(s.eigenvalues[i] + 1.0 / (n - 1)) < 1e-9);
    REQUIRE(s.interval_circ);
    CHECK(std::abs(s.interval_circ->hi + 1.0 / (n - 1)) < 1e-9);
  }
}

TEST_CASE("path on three vertices") {
  const WeightedGraph p3 = make_graph(3, {{0, 1}, {1, 2}}, std::vector<int>{0, 1, 0});
  const SpectrumReport s = spectrum(p3);
  REQUIRE(s.eigenvalues.size() == 3);
  CHECK(std::abs(s.eigenvalues[0] - 1) < 1e-9);
  CHECK(std::abs(s.eigenvalues[1]) < 1e-9);
  CHECK(std::abs(s.eigenvalues[2] + 1) < 1e-9);
  REQUIRE(s.interval_circ);
  CHECK(std::abs(s.interval_circ->lo + 1) < 1e-9);
  CHECK(std::abs(s.interval_circ->hi) < 1e-9);
  REQUIRE(s.interval_diamond);
  CHECK(std::abs(s.interval_diamond->lo) < 1e-9);
  CHECK(std::abs(s.interval_diamond->hi) < 1e-9);
}

TEST_CASE("Fano incidence graph spectrum") {
  const SpectrumReport s = spectrum(WeightedGraph(build_An(2, 2)));
  const double b = std::sqrt(2.0) / 3;
  for (double ev : s.eigenvalues)
    CHECK(std::min({std::abs(ev - 1), std::abs(ev + 1), std::abs(ev - b), std::abs(ev + b)}) < 1e-9);
  REQUIRE(s.interval_diamond);
  CHECK(std::abs(s.interval_diamond->hi - b) < 1e-9);
  for (double r : s.residuals) CHECK(r < 1e-9);
}

TEST_CASE("Cheeger constants against a direct subset scan") {
  const CheegerResult k3 = cheeger(complete_graph(3).weighted());
  CHECK(k3.h == 2);
  CHECK(k3.h_prime == Rational(3, 2));
  const CheegerResult p3 = cheeger(path_graph(3).weighted());
  CHECK(p3.h == 2);
  CHECK(p3.h_prime == Rational(4, 3));
  const CheegerResult k2 = cheeger(path_graph(2).weighted());
  CHECK(k2.h == 2);
  CHECK(k2.h_prime == 2);
  for (const auto& spec : connected_catalog(6)) {
    const WeightedGraph g = spec.weighted();
    const CheegerResult c = cheeger(g);
    const BruteCheeger b = brute_cheeger(g);
    CHECK(c.h == b.h);
    CHECK(c.h_prime == b.h_prime);
  }
}

TEST_CASE("sampled Cheeger values are upper bounds") {
  const WeightedGraph g = petersen_graph().weighted();
  const CheegerResult exact = cheeger(g);
  const CheegerResult sampled = cheeger(g, SampleOptions{9, 500}, 4);
  CHECK_FALSE(sampled.exact);
  CHECK(sampled.h >= exact.h);
  CHECK(sampled.h_prime >= exact.h_prime);
}

TEST_CASE("Cheeger inequality margins") {
  const CheegerInequalityReport k3 = check_cheeger_inequality(complete_graph(3).weighted());
  CHECK(std::abs(k3.theorem_margin) < 1e-9);
  const CheegerInequalityReport p3 = check_cheeger_inequality(path_graph(3).weighted());
  CHECK(p3.theorem_margin == doctest::Approx(1.0 / 3));
  for (int n = 3; n <= 7; ++n) {
    const CheegerInequalityReport r = check_cheeger_inequality(complete_graph(n).weighted());
    CHECK(r.holds(1e-9));
    CHECK(to_double(r.h_prime) >= 1 + 1.0 / (n - 1) - 1e-9);
  }
}

TEST_CASE("mixing lemma on K3 and the Petersen graph") {
  const MixingReport k3 = eml_check(complete_graph(3).weighted(), MixingOptions{});
  CHECK(k3.ok());
  CHECK(k3.pairs == 64);
  const MixingReport p = eml_check(petersen_graph().weighted(), MixingOptions{});
  CHECK(p.ok());
  MixingOptions sampled;
  sampled.exhaustive = false;
  sampled.seed = 4;
  const MixingReport ico = eml_check(icosahedron_graph().weighted(), sampled);
  CHECK(ico.ok());
  CHECK(ico.pairs == 2000);
}

TEST_CASE("partite mixing lemma") {
  MixingOptions opt;
  opt.exhaustive = false;
  const MixingReport fano = partite_eml_check(WeightedGraph(build_An(2, 2)), opt);
  CHECK(fano.ok());
  const GraphSpec k33 = complete_bipartite(3, 3);
  const WeightedGraph g = make_graph(k33.n, k33.edges, std::vector<int>{0, 0, 0, 1, 1, 1});
  CHECK(partite_eml_check(g, MixingOptions{}).ok());
  CHECK_THROWS_AS(partite_eml_check(complete_graph(4).weighted(), MixingOptions{}), Error);
}
