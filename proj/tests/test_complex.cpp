#include "sheafex/catalog.hpp"
#include "sheafex/complex.hpp"
#include "sheafex/complex_io.hpp"
#include "sheafex/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

using namespace sheafex;

namespace {

Complex path3() { return Complex::build({{"a", "b"}, {"b", "c"}}); }
Complex triangle_graph() { return Complex::build({{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

// Brute force: sets of k vertices of K_n that carry a cycle using all of them.
int count_cycles_by_permutation(int n, int len) {
  std::set<std::vector<int>> seen;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  int count = 0;
  do {
    std::vector<int> cyc(perm.begin(), perm.begin() + len);
    // Canonical form: rotate to the smallest vertex, then pick the smaller direction.
    const auto it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
    if (cyc[1] > cyc.back()) std::reverse(cyc.begin() + 1, cyc.end());
    if (seen.insert(cyc).second) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST_CASE("closure of top faces") {
  const Complex p = path3();
  CHECK(p.dimension() == 1);
  CHECK(p.face_count(0) == 3);
  CHECK(p.face_count(1) == 2);
  CHECK(p.face_count(-1) == 1);

  const Complex k3 = triangle_graph();
  CHECK(k3.face_count(1) == 3);

  const Complex t = Complex::build({{"a", "b", "c"}});
  CHECK(t.dimension() == 2);
  CHECK(t.face_count(1) == 3);
  CHECK(t.face_count(0) == 3);
  CHECK(t.face_count(-1) == 1);
}

TEST_CASE("mixed top-face sizes are rejected") {
  CHECK_THROWS_AS(Complex::build({{"a", "b"}, {"a", "b", "c"}}), Error);
}

TEST_CASE("canonical weights on small graphs") {
  const WeightedComplex k3 = canonical_weights(triangle_graph());
  for (const auto& w : k3.weights(1)) CHECK(w == Rational(1, 3));
  for (const auto& w : k3.weights(0)) CHECK(w == Rational(1, 3));
  CHECK(k3.weights(-1)[0] == 1);

  const WeightedComplex p = canonical_weights(path3());
  for (const auto& w : p.weights(1)) CHECK(w == Rational(1, 2));
  CHECK(p.weight(Face{0}) == Rational(1, 4));
  CHECK(p.weight(Face{1}) == Rational(1, 2));
  CHECK(p.weight(Face{2}) == Rational(1, 4));
  Rational total = 0;
  for (const auto& w : p.weights(0)) total += w;
  CHECK(total == 1);
}

TEST_CASE("canonical weights on a regular graph") {
  const WeightedGraph g = petersen_graph().weighted();
  const int n = 10, k = 3;
  for (const auto& w : g.edge_weights()) CHECK(w == Rational(2, k * n));
  for (const auto& w : g.vertex_weights()) CHECK(w == Rational(1, n));
}

TEST_CASE("weight validation") {
  CHECK(validate_weights(canonical_weights(triangle_graph())).ok());
  CHECK(validate_weights(canonical_weights(path3())).ok());

  const WeightedComplex k3 = canonical_weights(triangle_graph());
  std::vector<std::vector<Rational>> w = {k3.weights(-1), k3.weights(0), k3.weights(1)};
  w[1][1] += Rational(1, 100);
  const ValidationReport r = validate_weights(WeightedComplex(triangle_graph(), w));
  REQUIRE_FALSE(r.ok());
  bool w2_at_vertex = false;
  for (const auto& v : r.violations) w2_at_vertex = w2_at_vertex || (v.axiom == "W2" && v.face == Face{1});
  CHECK(w2_at_vertex);

  // A 2-complex: the identity of Eq. (2.1) across all levels.
  CHECK(validate_weights(canonical_weights(Complex::build({{"a", "b", "c"}, {"b", "c", "d"}}))).ok());
}

TEST_CASE("partite labels must separate the vertices of every face") {
  const Complex k3 = triangle_graph();
  const WeightedComplex x = canonical_weights(k3, std::vector<int>{0, 1, 0});
  const ValidationReport r = validate_weights(x);
  CHECK_FALSE(r.ok());
}

TEST_CASE("skeleton") {
  const WeightedComplex t = canonical_weights(Complex::build({{"a", "b", "c"}}));
  const WeightedComplex s = skeleton(t, 1);
  CHECK(s.dimension() == 1);
  CHECK(s.faces(1).size() == 3);
  CHECK(validate_weights(s).ok());
  for (const auto& w : s.weights(1)) CHECK(w == Rational(1, 3));
  const WeightedComplex same = skeleton(t, 2);
  CHECK(same.weights(2) == t.weights(2));
  CHECK(same.weights(0) == t.weights(0));
  CHECK_THROWS_AS(skeleton(t, 3), Error);
}

TEST_CASE("cycle enumeration") {
  const WeightedGraph k3 = complete_graph(3).weighted();
  CHECK(enumerate_cycles(k3, 3).size() == 1);
  CHECK(enumerate_cycles(path_graph(3).weighted(), 10).empty());
  const WeightedGraph k4 = complete_graph(4).weighted();
  const auto cycles = enumerate_cycles(k4, 4);
  CHECK(cycles.size() == static_cast<std::size_t>(count_cycles_by_permutation(4, 3) + count_cycles_by_permutation(4, 4)));
  CHECK(cycles.size() == 7);
  const WeightedGraph k5 = complete_graph(5).weighted();
  CHECK(enumerate_cycles(k5, 5).size() ==
        static_cast<std::size_t>(count_cycles_by_permutation(5, 3) + count_cycles_by_permutation(5, 4) +
                                 count_cycles_by_permutation(5, 5)));
  for (const auto& c : cycles) {
    CHECK(c.length() == static_cast<int>(c.vertices.size()));
    CHECK(c.vertices.front() == *std::min_element(c.vertices.begin(), c.vertices.end()));
  }
}

TEST_CASE("short path enumeration") {
  const auto p = enumerate_short_paths(path_graph(3).weighted(), 2);
  CHECK(p.size() == 3);
  CHECK(std::count_if(p.begin(), p.end(), [](const CyclePath& c) { return c.length() == 2; }) == 1);
  const auto k = enumerate_short_paths(complete_graph(3).weighted(), 2);
  CHECK(std::count_if(k.begin(), k.end(), [](const CyclePath& c) { return c.length() == 1; }) == 3);
  CHECK(std::count_if(k.begin(), k.end(), [](const CyclePath& c) { return c.length() == 2; }) == 3);
  CHECK(enumerate_short_paths(path_graph(2).weighted(), 2).size() == 1);
}

TEST_CASE("t and s constants") {
  const TsConstants p = ts_constants(petersen_graph().weighted());
  CHECK(p.t == Rational(2, 3));
  CHECK(p.s == Rational(2, 30));
  const TsConstants k3 = ts_constants(complete_graph(3).weighted());
  CHECK(k3.t == 1);
  CHECK(k3.s == Rational(1, 3));
  const TsConstants p3 = ts_constants(path_graph(3).weighted());
  CHECK(p3.t == 2);
  CHECK(p3.s == Rational(1, 2));
}

TEST_CASE("graph utilities") {
  const WeightedGraph p4 = path_graph(4).weighted();
  CHECK(bridges(p4).size() == 3);
  CHECK(diameter(p4) == 3);
  CHECK(bipartition(p4).has_value());
  CHECK_FALSE(bipartition(complete_graph(3).weighted()).has_value());
  CHECK(bridges(cycle_graph(5).weighted()).empty());
  CHECK(is_connected(petersen_graph().weighted()));
}

TEST_CASE("catalog counts match the known numbers of connected graphs") {
  const std::vector<std::size_t> known = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) CHECK(connected_graphs(n).size() == known[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("random regular graphs are regular, simple and reproducible") {
  CounterRng a(5), b(5);
  const GraphSpec x = random_regular(12, 5, a);
  const GraphSpec y = random_regular(12, 5, b);
  CHECK(x.edges == y.edges);
  const WeightedGraph g = x.weighted();
  for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 5);
  CHECK(is_connected(g));
}

TEST_CASE("complex files round-trip byte for byte") {
  const WeightedComplex x = canonical_weights(Complex::build({{"a", "b", "c"}, {"b", "c", "d"}}));
  const std::string path = "roundtrip_test.json";
  save_complex(x, path);
  std::ifstream f1(path);
  const std::string first((std::istreambuf_iterator<char>(f1)), {});
  const WeightedComplex y = load_complex(path);
  save_complex(y, path);
  std::ifstream f2(path);
  const std::string second((std::istreambuf_iterator<char>(f2)), {});
  std::remove(path.c_str());
  CHECK(first == second);
  CHECK(y.weights(0) == x.weights(0));
  CHECK(y.weights(2) == x.weights(2));
}

TEST_CASE("complex files without weights get canonical weights") {
  const auto j = nlohmann::json::parse(R"({"dimension": 1, "top_faces": [["a","b"],["b","c"]]})");
  const WeightedComplex x = complex_from_json(j);
  CHECK(x.weight(Face{1}) == Rational(1, 2));
}
