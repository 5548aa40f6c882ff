#include "sheafex/cohomology.hpp"

#include "sheafex/error.hpp"
#include "sheafex/rng.hpp"
#include "sheafex/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sheafex {

namespace {

using i128 = __int128;

AbelianGroup product_group(const std::vector<AbelianGroup>& factors) {
  std::vector<std::int64_t> moduli;
  std::optional<int> prime;
  bool same_prime = !factors.empty();
  for (const auto& g : factors) {
    moduli.insert(moduli.end(), g.moduli().begin(), g.moduli().end());
    if (!g.prime() || (prime && *prime != *g.prime())) same_prime = false;
    if (g.prime()) prime = g.prime();
  }
  std::vector<Element> rows;
  std::size_t offset = 0;
  for (const auto& g : factors) {
    for (const auto& r : g.relations().rows()) {
      Element padded(moduli.size(), 0);
      std::copy(r.begin(), r.end(), padded.begin() + static_cast<std::ptrdiff_t>(offset));
      rows.push_back(std::move(padded));
    }
    offset += static_cast<std::size_t>(g.rank());
  }
  // Zero-rank factors do not affect the product; a product of only those is the trivial group.
  if (moduli.empty()) return AbelianGroup();
  return AbelianGroup(std::move(moduli), rows, same_prime ? prime : std::nullopt);
}

std::vector<AbelianGroup> face_groups(const AugmentedSheaf& f, int degree) {
  std::vector<AbelianGroup> out;
  if (degree == -1) {
    out.push_back(f.empty_group());
  } else if (degree == 0) {
    for (int v = 0; v < f.graph().vertex_count(); ++v) out.push_back(f.vertex_group(v));
  } else if (degree == 1) {
    for (int e = 0; e < f.graph().edge_count(); ++e) out.push_back(f.edge_group(e));
  } else {
    throw Error(ErrorKind::BadDimension, "cochains exist in degrees -1, 0 and 1 on a graph");
  }
  return out;
}

const Rational& face_weight(const AugmentedSheaf& f, int degree, std::size_t i) {
  static const Rational one(1);
  if (degree == -1) return one;
  if (degree == 0) return f.graph().vertex_weight(static_cast<int>(i));
  return f.graph().edge_weight(static_cast<int>(i));
}


std::uint64_t saturate(const BigInt& n) {
  return n > BigInt(~std::uint64_t{0}) ? ~std::uint64_t{0} : n.convert_to<std::uint64_t>();
}

bool field_backend(const AugmentedSheaf& f) {
  const AbelianGroup c0 = cochain_group(f, 0);
  const AbelianGroup c1 = cochain_group(f, 1);
  if (!c0.prime()) return false;
  return c1.rank() == 0 || (c1.prime() && *c1.prime() == *c0.prime());
}

// Basis of {x ∈ F_p^cols : Mx = 0}.
std::vector<std::vector<std::int64_t>> nullspace_mod_p(std::vector<std::vector<std::int64_t>> m, std::size_t cols,
                                                       std::int64_t p) {
  std::vector<int> pivot_col;
  std::size_t row = 0;
  auto inv = [&](std::int64_t a) {
    std::int64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const std::int64_t iv = inv(m[row][c]);
    for (auto& x : m[row]) x = x * iv % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const std::int64_t k = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = mod(m[r][j] - k * m[row][j], p);
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::int64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[static_cast<std::size_t>(pivot_col[r])] = mod(-m[r][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> free_coordinates(const AbelianGroup& g) {
  std::vector<std::size_t> out;
  const auto& steps = g.relations().steps();
  for (std::size_t c = 0; c < steps.size(); ++c)
    if (steps[c] > 1) out.push_back(c);
  return out;
}

Cochain unit_cochain(const AugmentedSheaf& f, int degree, std::size_t flat_coord) {
  Element x = cochain_group(f, degree).zero();
  x[flat_coord] = 1;
  Cochain c = unflatten(f, degree, x);
  const auto groups = face_groups(f, degree);
  for (std::size_t i = 0; i < groups.size(); ++i) c.values[i] = groups[i].normalize(c.values[i]);
  return c;
}

std::vector<Word> words_of(const AugmentedSheaf& f, const std::vector<Cochain>& cs) {
  std::vector<Word> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(to_word(f, c));
  return out;
}

// Nullspace basis of d₀ over F_p on the free coordinates of C⁰.
std::vector<Cochain> z0_field_basis(const AugmentedSheaf& f) {
  const AbelianGroup c0 = cochain_group(f, 0);
  const AbelianGroup c1 = cochain_group(f, 1);
  const std::int64_t p = *c0.prime();
  const auto free0 = free_coordinates(c0);
  const auto free1 = free_coordinates(c1);
  std::vector<std::vector<std::int64_t>> m(free1.size(), std::vector<std::int64_t>(free0.size(), 0));
  for (std::size_t j = 0; j < free0.size(); ++j) {
    const Element img = flatten(coboundary(f, unit_cochain(f, 0, free0[j])));
    for (std::size_t i = 0; i < free1.size(); ++i) m[i][j] = img[free1[i]];
  }
  std::vector<Cochain> out;
  for (const auto& v : nullspace_mod_p(std::move(m), free0.size(), p)) {
    Element x = c0.zero();
    for (std::size_t j = 0; j < free0.size(); ++j) x[free0[j]] = v[j];
    out.push_back(unflatten(f, 0, x));
  }
  return out;
}

}  // namespace

AbelianGroup cochain_group(const AugmentedSheaf& f, int degree) { return product_group(face_groups(f, degree)); }

Element flatten(const Cochain& c) {
  Element x;
  for (const auto& v : c.values) x.insert(x.end(), v.begin(), v.end());
  return x;
}

Cochain unflatten(const AugmentedSheaf& f, int degree, const Element& x) {
  Cochain c{degree, {}};
  std::size_t offset = 0;
  for (const auto& g : face_groups(f, degree)) {
    const auto k = static_cast<std::size_t>(g.rank());
    if (offset + k > x.size()) throw Error(ErrorKind::TypeMismatch, "flat cochain too short");
    c.values.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(offset), x.begin() + static_cast<std::ptrdiff_t>(offset + k));
    offset += k;
  }
  if (offset != x.size()) throw Error(ErrorKind::TypeMismatch, "flat cochain too long");
  return c;
}

Cochain zero_cochain(const AugmentedSheaf& f, int degree) {
  Cochain c{degree, {}};
  for (const auto& g : face_groups(f, degree)) c.values.push_back(g.zero());
  return c;
}

Cochain coboundary(const AugmentedSheaf& f, const Cochain& c) {
  const auto groups = face_groups(f, c.degree);
  if (c.values.size() != groups.size()) throw Error(ErrorKind::TypeMismatch, "cochain has wrong number of faces");
  for (std::size_t i = 0; i < groups.size(); ++i)
    if (!groups[i].is_canonical(c.values[i]))
      throw Error(ErrorKind::TypeMismatch, "value at face " + std::to_string(i) + " is not an element of its group");
  const WeightedGraph& g = f.graph();
  if (c.degree == -1) {
    Cochain out{0, {}};
    for (int v = 0; v < g.vertex_count(); ++v) out.values.push_back(f.res_vertex(v).apply(c.values[0]));
    return out;
  }
  if (c.degree == 0) {
    Cochain out{1, {}};
    for (int e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      const Element plus = f.res_plus(e).apply(c.values[static_cast<std::size_t>(ed.v)]);
      const Element minus = f.res_minus(e).apply(c.values[static_cast<std::size_t>(ed.u)]);
      out.values.push_back(f.edge_group(e).sub(plus, minus));
    }
    return out;
  }
  throw Error(ErrorKind::BadDimension, "coboundary implemented for degrees -1 and 0");
}

Rational support_norm(const AugmentedSheaf& f, const Cochain& c) {
  Rational s = 0;
  for (std::size_t i = 0; i < c.values.size(); ++i)
    if (std::any_of(c.values[i].begin(), c.values[i].end(), [](std::int64_t x) { return x != 0; }))
      s += face_weight(f, c.degree, i);
  return s;
}

CohomologySummary cohomology_spaces(const AugmentedSheaf& f, std::uint64_t budget) {
  CohomologySummary s;
  const AbelianGroup cm = cochain_group(f, -1);
  const AbelianGroup c0 = cochain_group(f, 0);
  const AbelianGroup c1 = cochain_group(f, 1);

  std::vector<Element> b0_gens;
  for (std::size_t k = 0; k < static_cast<std::size_t>(cm.rank()); ++k) {
    Cochain b = coboundary(f, unit_cochain(f, -1, k));
    b0_gens.push_back(flatten(b));
    s.b0_generators.push_back(std::move(b));
  }
  s.b0_order = c0.subgroup_order(b0_gens);

  std::vector<Element> im_d0;
  for (std::size_t k = 0; k < static_cast<std::size_t>(c0.rank()); ++k)
    im_d0.push_back(flatten(coboundary(f, unit_cochain(f, 0, k))));
  s.z0_order = c0.order() / c1.subgroup_order(im_d0);
  s.h0_order = s.z0_order / s.b0_order;

  // d₀ ∘ d₋₁ = 0 on all of 𝓕(∅) when enumerable, else on generators and 1000 samples.
  auto check = [&](const Element& h) {
    ++s.d0_after_dminus1_checked;
    const Cochain dd = coboundary(f, coboundary(f, Cochain{-1, {h}}));
    if (support_norm(f, dd) != 0) s.d0_after_dminus1_zero = false;
  };
  if (cm.order() <= budget) {
    for (const auto& h : cm.elements(budget)) check(h);
  } else {
    for (std::size_t k = 0; k < static_cast<std::size_t>(cm.rank()); ++k) check(unit_cochain(f, -1, k).values[0]);
    CounterRng rng(0x5eed);
    for (int t = 0; t < 1000; ++t) {
      Element h(static_cast<std::size_t>(cm.rank()));
      for (std::size_t c = 0; c < h.size(); ++c) h[c] = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cm.moduli()[c])));
      check(cm.normalize(h));
    }
  }

  if (field_backend(f)) {
    s.z0_generators = z0_field_basis(f);
  } else {
    std::vector<Element> gens;
    BigInt current = 1;
    for (const auto& z : z0_elements(f, budget)) {
      if (current == s.z0_order) break;
      gens.push_back(flatten(z));
      const BigInt next = c0.subgroup_order(gens);
      if (next == current) {
        gens.pop_back();
        continue;
      }
      current = next;
      s.z0_generators.push_back(z);
    }
  }
  return s;
}

std::vector<Cochain> b0_elements(const AugmentedSheaf& f, std::uint64_t budget) {
  std::set<Word> seen;
  std::vector<Cochain> out;
  for (const auto& h : f.empty_group().elements(budget)) {
    Cochain b = coboundary(f, Cochain{-1, {h}});
    if (seen.insert(to_word(f, b)).second) out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [&](const Cochain& a, const Cochain& b) { return to_word(f, a) < to_word(f, b); });
  return out;
}

std::vector<Cochain> z0_elements(const AugmentedSheaf& f, std::uint64_t budget) {
  const WeightedGraph& g = f.graph();
  std::vector<Cochain> out;
  if (field_backend(f)) {
    std::vector<Element> gens;
    for (const auto& z : z0_field_basis(f)) gens.push_back(flatten(z));
    for (const auto& x : cochain_group(f, 0).subgroup_elements(gens, budget)) out.push_back(unflatten(f, 0, x));
  } else {
    // Backtracking over vertices in index order, pruning on edges to earlier vertices.
    const WordSpace space = word_space(f);
    const int n = g.vertex_count();
    std::vector<std::uint64_t> size(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) size[static_cast<std::size_t>(v)] = space.domain[static_cast<std::size_t>(v)].small_order();
    Word w(static_cast<std::size_t>(n), 0);
    std::uint64_t nodes = 0;
    const std::uint64_t node_cap = budget * 64;
    auto consistent = [&](int v) {
      for (auto [y, e] : g.incident(v)) {
        if (y > v) continue;
        const auto& mi = space.minus[static_cast<std::size_t>(e)];
        const auto& pl = space.plus[static_cast<std::size_t>(e)];
        if (mi[w[static_cast<std::size_t>(y)]] != pl[w[static_cast<std::size_t>(v)]]) return false;
      }
      return true;
    };
    std::vector<Word> found;
    auto rec = [&](auto&& self, int v) -> void {
      if (v == n) {
        if (found.size() >= budget) throw BudgetExceeded("cocycle enumeration", budget, found.size() + 1);
        found.push_back(w);
        return;
      }
      for (std::uint64_t a = 0; a < size[static_cast<std::size_t>(v)]; ++a) {
        if (++nodes > node_cap) throw BudgetExceeded("cocycle search nodes", node_cap, nodes);
        w[static_cast<std::size_t>(v)] = a;
        if (consistent(v)) self(self, v + 1);
      }
    };
    rec(rec, 0);
    for (const auto& word : found) out.push_back(from_word(f, word));
  }
  std::sort(out.begin(), out.end(), [&](const Cochain& a, const Cochain& b) { return to_word(f, a) < to_word(f, b); });
  return out;
}

DistanceResult dist_to_B0(const AugmentedSheaf& f, const Cochain& c, std::uint64_t budget) {
  if (c.degree != 0) throw Error(ErrorKind::TypeMismatch, "distance to B0 needs a 0-cochain");
  coboundary(f, c);  // type check
  std::optional<DistanceResult> best;
  for (const auto& b : b0_elements(f, budget)) {
    Cochain diff{0, {}};
    for (int v = 0; v < f.graph().vertex_count(); ++v)
      diff.values.push_back(f.vertex_group(v).sub(c.values[static_cast<std::size_t>(v)], b.values[static_cast<std::size_t>(v)]));
    const Rational d = support_norm(f, diff);
    if (!best || d < best->distance) best = DistanceResult{d, b};
  }
  return *best;
}

WordSpace word_space(const AugmentedSheaf& f) {
  WordSpace s;
  const WeightedGraph& g = f.graph();
  for (int v = 0; v < g.vertex_count(); ++v) s.domain.push_back(f.vertex_group(v));
  for (int e = 0; e < g.edge_count(); ++e) {
    s.minus.push_back(f.res_minus(e).table());
    s.plus.push_back(f.res_plus(e).table());
  }
  return s;
}

Word to_word(const AugmentedSheaf& f, const Cochain& c) {
  if (c.degree != 0 || c.values.size() != static_cast<std::size_t>(f.graph().vertex_count()))
    throw Error(ErrorKind::TypeMismatch, "words are 0-cochains");
  Word w;
  for (std::size_t v = 0; v < c.values.size(); ++v) w.push_back(f.vertex_group(static_cast<int>(v)).index(c.values[v]));
  return w;
}

Cochain from_word(const AugmentedSheaf& f, const Word& w) {
  Cochain c{0, {}};
  for (std::size_t v = 0; v < w.size(); ++v) c.values.push_back(f.vertex_group(static_cast<int>(v)).element(w[v]));
  return c;
}

RatioSearch min_ratio(const WeightedGraph& g, const WordSpace& space, const std::vector<Word>& subgroup,
                      std::optional<SampleSpec> sampled, std::uint64_t budget) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const IntegerWeights iw = integer_weights(g);
  std::int64_t total_vertex = 0;
  for (auto x : iw.vertex) total_vertex += x;
  if (subgroup.empty()) throw Error(ErrorKind::InvalidInput, "subgroup must contain zero");

  std::vector<std::uint64_t> size(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) size[static_cast<std::size_t>(v)] = space.domain[static_cast<std::size_t>(v)].small_order();

  // Per-vertex fibers of the subgroup for distance voting.
  std::vector<std::vector<std::vector<std::uint32_t>>> fiber(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (size[static_cast<std::size_t>(v)] > (std::uint64_t{1} << 24))
      throw BudgetExceeded("vertex group size", std::uint64_t{1} << 24, size[static_cast<std::size_t>(v)]);
    fiber[static_cast<std::size_t>(v)].resize(size[static_cast<std::size_t>(v)]);
  }
  for (std::size_t k = 0; k < subgroup.size(); ++k)
    for (int v = 0; v < n; ++v)
      fiber[static_cast<std::size_t>(v)][subgroup[k][static_cast<std::size_t>(v)]].push_back(static_cast<std::uint32_t>(k));

  Word word(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> score(subgroup.size(), 0);
  std::vector<char> sat(static_cast<std::size_t>(m), 0);
  std::int64_t unsat = 0;

  auto edge_ok = [&](int e) {
    const std::uint32_t a = space.minus[static_cast<std::size_t>(e)][word[static_cast<std::size_t>(g.edge(e).u)]];
    const std::uint32_t b = space.plus[static_cast<std::size_t>(e)][word[static_cast<std::size_t>(g.edge(e).v)]];
    return a != kReject && a == b;
  };
  auto rebuild = [&]() {
    unsat = 0;
    for (int e = 0; e < m; ++e) {
      sat[static_cast<std::size_t>(e)] = edge_ok(e);
      if (!sat[static_cast<std::size_t>(e)]) unsat += iw.edge[static_cast<std::size_t>(e)];
    }
    std::fill(score.begin(), score.end(), 0);
    for (int v = 0; v < n; ++v)
      for (auto k : fiber[static_cast<std::size_t>(v)][word[static_cast<std::size_t>(v)]]) score[k] += iw.vertex[static_cast<std::size_t>(v)];
  };
  auto set_vertex = [&](int v, std::uint64_t value) {
    const auto vi = static_cast<std::size_t>(v);
    for (auto k : fiber[vi][word[vi]]) score[k] -= iw.vertex[vi];
    word[vi] = value;
    for (auto k : fiber[vi][word[vi]]) score[k] += iw.vertex[vi];
    for (auto [y, e] : g.incident(v)) {
      (void)y;
      const auto ei = static_cast<std::size_t>(e);
      const bool now = edge_ok(e);
      if (now != static_cast<bool>(sat[ei])) {
        unsat += now ? -iw.edge[ei] : iw.edge[ei];
        sat[ei] = now;
      }
    }
  };

  RatioSearch best;
  best.exhaustive = !sampled;
  std::int64_t best_u = 0, best_d = 1;
  Word best_nearest;
  auto evaluate = [&]() {
    ++best.evaluated;
    std::size_t arg = 0;
    for (std::size_t k = 1; k < score.size(); ++k)
      if (score[k] > score[arg]) arg = k;
    const std::int64_t dist = total_vertex - score[arg];
    if (dist <= 0) return;
    if (best.unconstrained || i128(unsat) * best_d < i128(best_u) * dist) {
      best.unconstrained = false;
      best_u = unsat;
      best_d = dist;
      best.witness = word;
      best.nearest = subgroup[arg];
    }
  };

  if (sampled) {
    CounterRng rng(sampled->seed);
    for (std::uint64_t t = 0; t < sampled->trials; ++t) {
      for (int v = 0; v < n; ++v) word[static_cast<std::size_t>(v)] = rng.below(size[static_cast<std::size_t>(v)]);
      rebuild();
      evaluate();
    }
  } else {
    // Transversal of the subgroup: coset minima of the successive projections.
    std::vector<std::vector<std::uint64_t>> allowed(static_cast<std::size_t>(n));
    std::vector<std::size_t> alive(subgroup.size());
    for (std::size_t k = 0; k < alive.size(); ++k) alive[k] = k;
    BigInt count = 1;
    for (int v = 0; v < n; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      const AbelianGroup& grp = space.domain[vi];
      std::set<std::uint64_t> proj;
      for (auto k : alive) proj.insert(subgroup[k][vi]);
      std::vector<Element> shifts;
      for (auto s : proj) shifts.push_back(grp.element(s));
      std::vector<char> marked(size[vi], 0);
      for (std::uint64_t a = 0; a < size[vi]; ++a) {
        if (marked[a]) continue;
        allowed[vi].push_back(a);
        const Element ea = grp.element(a);
        for (const auto& s : shifts) marked[grp.index(grp.add(ea, s))] = 1;
      }
      count *= allowed[vi].size();
      std::vector<std::size_t> next;
      for (auto k : alive)
        if (subgroup[k][vi] == 0) next.push_back(k);
      alive = std::move(next);
    }
    if (count > budget) throw BudgetExceeded("cochain transversal", budget, saturate(count));

    std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) word[static_cast<std::size_t>(v)] = allowed[static_cast<std::size_t>(v)][0];
    rebuild();
    while (true) {
      evaluate();
      if (!best.unconstrained && best_u == 0) break;
      int i = n - 1;
      while (i >= 0 && pos[static_cast<std::size_t>(i)] + 1 == allowed[static_cast<std::size_t>(i)].size()) {
        pos[static_cast<std::size_t>(i)] = 0;
        set_vertex(i, allowed[static_cast<std::size_t>(i)][0]);
        --i;
      }
      if (i < 0) break;
      ++pos[static_cast<std::size_t>(i)];
      set_vertex(i, allowed[static_cast<std::size_t>(i)][pos[static_cast<std::size_t>(i)]]);
    }
  }
  if (!best.unconstrained) {
    const Rational D(iw.denominator);
    best.coboundary_norm = Rational(best_u) / D;
    best.distance = Rational(best_d) / D;
    best.value = Rational(best_u, best_d);
  }
  return best;
}

ExpansionResult cb0(const AugmentedSheaf& f, std::optional<SampleSpec> sampled, std::uint64_t budget) {
  const auto b0 = b0_elements(f, budget);
  const RatioSearch r = min_ratio(f.graph(), word_space(f), words_of(f, b0), sampled, budget);
  ExpansionResult out;
  out.exhaustive = r.exhaustive;
  out.unconstrained = r.unconstrained;
  out.evaluated = r.evaluated;
  if (!r.unconstrained) {
    out.value = r.value;
    out.witness = from_word(f, r.witness);
    out.nearest = from_word(f, r.nearest);
    out.coboundary_norm = r.coboundary_norm;
    out.distance = r.distance;
  }
  return out;
}

CosystolicReport cosystolic_check(const AugmentedSheaf& f, double epsilon, double delta,
                                  std::optional<SampleSpec> sampled, std::uint64_t budget) {
  CosystolicReport rep;
  rep.exhaustive = !sampled;
  rep.epsilon = epsilon;
  rep.delta = delta;
  const auto z0 = z0_elements(f, budget);
  const RatioSearch r = min_ratio(f.graph(), word_space(f), words_of(f, z0), sampled, budget);
  rep.epsilon_unconstrained = r.unconstrained;
  if (!r.unconstrained) {
    rep.epsilon_max = r.value;
    rep.c1_witness = from_word(f, r.witness);
  }
  rep.c1_holds = r.unconstrained || Rational(epsilon) <= rep.epsilon_max;

  std::set<Word> b0;
  for (const auto& b : b0_elements(f, budget)) b0.insert(to_word(f, b));
  rep.delta_vacuous = true;
  rep.delta_max = 1;
  for (const auto& z : z0) {
    if (b0.count(to_word(f, z))) continue;
    const Rational norm = support_norm(f, z);
    if (rep.delta_vacuous || norm < rep.delta_max) {
      rep.delta_vacuous = false;
      rep.delta_max = norm;
      rep.c2_witness = z;
    }
  }
  rep.c2_holds = rep.delta_vacuous || Rational(delta) <= rep.delta_max;
  return rep;
}

TheoremBound theorem_bound(const TheoremInputs& in) {
  if (in.lambda < in.mu) throw Error(ErrorKind::PreconditionViolated, "need lambda >= mu");
  const double theta = std::max(std::abs(in.lambda), std::abs(in.mu));
  const double s = in.s_elided ? 0.0 : in.s;
  TheoremBound b;
  b.inputs = in;
  if (!in.r) {
    b.value = (2 - 4 * in.lambda - 4 * theta - 5 * in.t - 2 * s) / (5 - 2 * in.lambda);
    b.formula = "(2-4l-4max(|l|,|mu|)-5t-2s)/(5-2l)";
  } else {
    const double r = *in.r;
    if (*in.r < 1) throw Error(ErrorKind::PreconditionViolated, "need r >= 1");
    if (in.lambda < -1.0 / r) throw Error(ErrorKind::PreconditionViolated, "partite bound needs lambda >= -1/r");
    b.value = (2 * r - 4 * r * in.lambda - 4 * r * r * theta - (5 * r + 2) * in.t - 2 * r * s) / (5 * r + 2 - 2 * r * in.lambda);
    b.formula = "(2r-4rl-4r^2max(|l|,|mu|)-(5r+2)t-2rs)/(5r+2-2rl)";
  }
  if (in.s_elided) b.formula += " with s=0";
  return b;
}

TheoremInputs theorem_inputs(const WeightedGraph& g, const SubgroupAssignment* assignment, bool partite) {
  const SpectrumReport spec = spectrum(g);
  TheoremInputs in;
  if (partite) {
    if (!spec.interval_diamond) throw Error(ErrorKind::PreconditionViolated, "partite bound needs a partite labeling");
    in.mu = spec.interval_diamond->lo;
    in.lambda = spec.interval_diamond->hi;
    in.r = g.class_count() - 1;
  } else {
    if (!spec.interval_circ) throw Error(ErrorKind::PreconditionViolated, "need at least two vertices");
    in.mu = spec.interval_circ->lo;
    in.lambda = spec.interval_circ->hi;
  }
  const TsConstants ts = ts_constants(g);
  in.t = to_double(ts.t);
  in.s = to_double(ts.s);
  bool uniform = true;
  for (int e = 1; e < g.edge_count(); ++e) uniform = uniform && g.edge_weight(e) == g.edge_weight(0);
  bool disjoint = false;
  if (assignment) {
    std::vector<std::vector<Element>> all = assignment->vertex;
    all.insert(all.end(), assignment->edge.begin(), assignment->edge.end());
    disjoint = check_linear_disjoint(assignment->ambient, all).disjoint;
  }
  in.s_elided = uniform || disjoint;
  return in;
}

namespace {

// x = a + b + c with a ∈ A, b ∈ B, c ∈ C, or nullopt.
std::optional<std::array<Element, 3>> decompose3(const AbelianGroup& r, const Element& x, const std::vector<Element>& a,
                                                 const std::vector<Element>& b, const std::vector<Element>& c) {
  for (const auto& ea : r.subgroup_elements(a))
    for (const auto& eb : r.subgroup_elements(b)) {
      const Element rest = r.sub(r.sub(x, ea), eb);
      if (r.in_subgroup(c, rest)) return std::array<Element, 3>{ea, eb, rest};
    }
  return std::nullopt;
}

}  // namespace

Element solve_cycle_cocycle(const WeightedGraph& g, const SubgroupAssignment& assignment, const Cochain& f) {
  const int n = g.vertex_count();
  if (n < 3 || g.edge_count() != n || !is_connected(g))
    throw Error(ErrorKind::PreconditionViolated, "graph is not a cycle");
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) throw Error(ErrorKind::PreconditionViolated, "graph is not a cycle");
  std::vector<std::vector<Element>> all = assignment.vertex;
  all.insert(all.end(), assignment.edge.begin(), assignment.edge.end());
  if (!check_linear_disjoint(assignment.ambient, all).disjoint)
    throw Error(ErrorKind::DisjointnessViolated, "subgroups on the cycle are not linearly disjoint");
  const AugmentedSheaf sheaf = quotient_by_subgroups(g, assignment);
  if (support_norm(sheaf, coboundary(sheaf, f)) != 0) throw Error(ErrorKind::NotCocycle, "d0 f is not zero");

  // Walk the cycle from vertex 0; edges[i] joins order[i] and order[i+1].
  std::vector<int> order{0};
  std::vector<int> edges;
  int cur = 0, prev_edge = -1;
  for (int step = 0; step < n; ++step) {
    for (auto [y, e] : g.incident(cur)) {
      if (e == prev_edge) continue;
      edges.push_back(e);
      prev_edge = e;
      cur = y;
      break;
    }
    if (step + 1 < n) order.push_back(cur);
  }
  const AbelianGroup& r = assignment.ambient;
  auto rv = [&](int i) -> const std::vector<Element>& { return assignment.vertex[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]; };
  std::vector<Element> gi;
  for (int v : order) gi.push_back(r.normalize(f.values[static_cast<std::size_t>(v)]));

  // g_{i+1} − g_i = a_i + c_i + b_{i+1} in R_{v_i} + R_{e_i} + R_{v_{i+1}}, uniquely by disjointness.
  // Summing around the cycle forces c_i = 0 and a_i = −b_i, so g_i + a_i is the same h for all i.
  const auto parts = decompose3(r, r.sub(gi[1], gi[0]), rv(0),
                                assignment.edge[static_cast<std::size_t>(edges[0])], rv(1));
  if (!parts) throw Error(ErrorKind::NotCocycle, "first edge difference has no decomposition");
  const Element c0 = (*parts)[0];
  const Element h = r.add(gi[0], c0);
  for (int i = 0; i < n; ++i)
    if (!r.in_subgroup(rv(i), r.sub(gi[static_cast<std::size_t>(i)], h)))
      throw Error(ErrorKind::NotCocycle, "recovered h does not match vertex " + std::to_string(order[static_cast<std::size_t>(i)]));
  return h;
}

CosystolicClaim remark42_convert(const Rational& cb0_value, const AugmentedSheaf& f, std::uint64_t budget) {
  CosystolicClaim c;
  c.epsilon = cb0_value;
  c.vacuous = !f.is_augmented();
  // (C2) for 𝓕₀ ranges over Z⁰ ∖ 0 = d₋₁𝓕(∅) ∖ 0, so δ is the least nonzero norm.
  std::optional<Rational> least;
  for (const auto& h : f.empty_group().elements(budget)) {
    const Rational d = support_norm(f, coboundary(f, Cochain{-1, {h}}));
    if (d > 0 && (!least || d < *least)) least = d;
  }
  c.delta = least.value_or(Rational(0));
  c.converse_applies = cohomology_spaces(f, budget).h0_order == 1;
  return c;
}

}  // namespace sheafex
