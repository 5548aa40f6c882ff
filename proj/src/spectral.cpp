#include "sheafex/spectral.hpp"

#include "sheafex/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace sheafex {

namespace {

template <class T>
std::vector<T> apply_adjacency(const WeightedGraph& g, const std::vector<T>& f, auto&& edge_coef) {
  const int n = g.vertex_count();
  if (static_cast<int>(f.size()) != n) throw Error(ErrorKind::TypeMismatch, "vertex function has wrong length");
  std::vector<T> out(static_cast<std::size_t>(n), T(0));
  for (int x = 0; x < n; ++x)
    for (auto [y, e] : g.incident(x)) out[static_cast<std::size_t>(x)] += edge_coef(x, e) * f[static_cast<std::size_t>(y)];
  return out;
}

}  // namespace

std::vector<Rational> adjacency_apply(const WeightedGraph& g, const std::vector<Rational>& f) {
  return apply_adjacency(g, f, [&](int x, int e) { return g.edge_weight(e) / (2 * g.vertex_weight(x)); });
}

std::vector<double> adjacency_apply(const WeightedGraph& g, const std::vector<double>& f) {
  return apply_adjacency(g, f, [&](int x, int e) {
    return to_double(g.edge_weight(e)) / (2.0 * to_double(g.vertex_weight(x)));
  });
}

std::vector<Rational> laplacian_apply(const WeightedGraph& g, const std::vector<Rational>& f) {
  auto a = adjacency_apply(g, f);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f[i] - a[i];
  return a;
}

std::vector<double> laplacian_apply(const WeightedGraph& g, const std::vector<double>& f) {
  auto a = adjacency_apply(g, f);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f[i] - a[i];
  return a;
}

Rational inner_product(const WeightedGraph& g, int dim, const std::vector<Rational>& f,
                       const std::vector<Rational>& h) {
  if (dim != 0 && dim != 1) throw Error(ErrorKind::BadDimension, "inner product on C^0 or C^1 only");
  const auto& w = dim == 0 ? g.vertex_weights() : g.edge_weights();
  if (f.size() != w.size() || h.size() != w.size()) throw Error(ErrorKind::TypeMismatch, "function length");
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * f[i] * h[i];
  return dim == 0 ? s : s / 2;
}

double inner_product(const WeightedGraph& g, int dim, const std::vector<double>& f, const std::vector<double>& h) {
  if (dim != 0 && dim != 1) throw Error(ErrorKind::BadDimension, "inner product on C^0 or C^1 only");
  const auto& w = dim == 0 ? g.vertex_weights() : g.edge_weights();
  if (f.size() != w.size() || h.size() != w.size()) throw Error(ErrorKind::TypeMismatch, "function length");
  double s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += to_double(w[i]) * f[i] * h[i];
  return dim == 0 ? s : s / 2;
}

DenseMatrix symmetrized_adjacency(const WeightedGraph& g) {
  const int n = g.vertex_count();
  DenseMatrix s(static_cast<std::size_t>(n));
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    const double val = to_double(g.edge_weight(e)) /
                       (2.0 * std::sqrt(to_double(g.vertex_weight(u)) * to_double(g.vertex_weight(v))));
    s(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) += val;
    s(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) += val;
  }
  return s;
}

namespace {

std::optional<Interval> compressed_interval(const DenseMatrix& s, const std::vector<std::vector<double>>& basis,
                                            double residual_tolerance) {
  Compression c = compress_to_complement(s, basis);
  if (c.columns.empty()) return std::nullopt;
  SymmetricEigen eig = jacobi_eigen(c.matrix);
  if (!eig.converged)
    throw Error(ErrorKind::ConvergenceFailure, "Jacobi on the deflated matrix did not converge (off-diagonal " +
                                                   std::to_string(eig.off_diagonal) + ")");
  (void)residual_tolerance;
  return Interval{eig.values.back(), eig.values.front()};
}

}  // namespace

SpectrumReport spectrum(const WeightedGraph& g, double residual_tolerance) {
  const int n = g.vertex_count();
  const DenseMatrix s = symmetrized_adjacency(g);
  SymmetricEigen eig = jacobi_eigen(s);

  SpectrumReport r;
  r.eigenvalues = eig.values;
  r.sweeps = eig.sweeps;
  std::vector<double> sqrt_w(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) sqrt_w[static_cast<std::size_t>(x)] = std::sqrt(to_double(g.vertex_weight(x)));
  double worst = 0.0;
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    const auto& v = eig.vectors[k];
    auto sv = s.apply(v);
    double res = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) res += (sv[i] - eig.values[k] * v[i]) * (sv[i] - eig.values[k] * v[i]);
    res = std::sqrt(res);
    r.residuals.push_back(res);
    worst = std::max(worst, res);
    std::vector<double> f(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) f[i] = v[i] / sqrt_w[i];
    r.eigenvectors.push_back(std::move(f));
  }
  if (worst > residual_tolerance)
    throw Error(ErrorKind::ConvergenceFailure, "eigenpair residual " + std::to_string(worst) + " after " +
                                                   std::to_string(eig.sweeps) + " sweeps");

  // 1_{X(0)} becomes sqrt_w (a unit vector, since Σw = 1) after symmetrization.
  double norm = std::sqrt(dot(sqrt_w, sqrt_w));
  std::vector<double> one = sqrt_w;
  for (auto& x : one) x /= norm;
  r.interval_circ = compressed_interval(s, {one}, residual_tolerance);
  if (r.interval_circ) r.lambda = std::max(std::abs(r.interval_circ->lo), std::abs(r.interval_circ->hi));

  if (const auto& part = g.partite()) {
    std::vector<std::vector<double>> basis;
    for (int c = 0; c < g.class_count(); ++c) {
      std::vector<double> ind(static_cast<std::size_t>(n), 0.0);
      for (int x = 0; x < n; ++x)
        if ((*part)[static_cast<std::size_t>(x)] == c) ind[static_cast<std::size_t>(x)] = sqrt_w[static_cast<std::size_t>(x)];
      const double len = std::sqrt(dot(ind, ind));
      if (len == 0.0) continue;
      for (auto& x : ind) x /= len;
      basis.push_back(std::move(ind));
    }
    r.interval_diamond = compressed_interval(s, basis, residual_tolerance);
  }
  return r;
}

std::vector<int> mask_vertices(std::uint64_t mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1U) out.push_back(i);
  return out;
}

namespace {

using i128 = __int128;

// Lexicographic comparison of the sorted vertex lists of two subsets.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const int m = std::countr_zero(a ^ b);
  if (a >> m & 1U) return (b >> (m + 1)) != 0;
  return (a >> (m + 1)) == 0;
}

struct CheegerScan {
  // h candidate: cut / min(a, D − a); h′: cut·D / (2 a (D − a)). All integers over D.
  std::int64_t D = 1;
  std::int64_t best_h_num = -1, best_h_den = 1;
  std::int64_t best_hp_cut = -1, best_hp_a = 1, best_hp_b = 1;
  std::uint64_t wit_h = 0, wit_hp = 0;

  void offer(std::uint64_t mask, std::int64_t cut, std::int64_t a) {
    const std::int64_t b = D - a;
    const std::int64_t m = std::min(a, b);
    if (best_h_num < 0 || i128(cut) * best_h_den < i128(best_h_num) * m ||
        (i128(cut) * best_h_den == i128(best_h_num) * m && lex_less(mask, wit_h))) {
      best_h_num = cut;
      best_h_den = m;
      wit_h = mask;
    }
    const i128 lhs = i128(cut) * best_hp_a * best_hp_b;
    const i128 rhs = i128(best_hp_cut) * a * b;
    if (best_hp_cut < 0 || lhs < rhs || (lhs == rhs && lex_less(mask, wit_hp))) {
      best_hp_cut = cut;
      best_hp_a = a;
      best_hp_b = b;
      wit_hp = mask;
    }
  }
};

}  // namespace

CheegerResult cheeger(const WeightedGraph& g, std::optional<SampleOptions> sampled, int cap) {
  const int n = g.vertex_count();
  if (n < 2) throw Error(ErrorKind::PreconditionViolated, "Cheeger constants need at least two vertices");
  const IntegerWeights iw = integer_weights(g);
  std::int64_t total = 0;
  for (auto w : iw.vertex) total += w;
  CheegerScan scan;
  scan.D = total;
  CheegerResult out;

  if (n <= cap && n <= 62) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::int64_t cut = 0, a = 0;
    std::uint64_t mask = 0;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t i = 1; i < count; ++i) {
      const int v = std::countr_zero(i);
      const bool was = in[static_cast<std::size_t>(v)];
      for (auto [y, e] : g.incident(v)) {
        const bool same = in[static_cast<std::size_t>(y)] == was;
        cut += same ? iw.edge[static_cast<std::size_t>(e)] : -iw.edge[static_cast<std::size_t>(e)];
      }
      in[static_cast<std::size_t>(v)] = !was;
      a += was ? -iw.vertex[static_cast<std::size_t>(v)] : iw.vertex[static_cast<std::size_t>(v)];
      mask ^= std::uint64_t{1} << v;
      if (mask == count - 1) continue;
      scan.offer(mask, cut, a);
    }
    out.subsets = count - 2;
  } else {
    if (!sampled) throw BudgetExceeded("exact Cheeger scan", static_cast<std::uint64_t>(cap), static_cast<std::uint64_t>(n));
    if (n > 62) throw Error(ErrorKind::PreconditionViolated, "sampled Cheeger supports n <= 62");
    CounterRng rng(sampled->seed);
    for (std::uint64_t t = 0; t < sampled->trials; ++t) {
      std::uint64_t mask = 0;
      for (int v = 0; v < n; ++v)
        if (rng.coin()) mask |= std::uint64_t{1} << v;
      if (mask == 0 || mask == (std::uint64_t{1} << n) - 1) continue;
      std::int64_t cut = 0, a = 0;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1U) a += iw.vertex[static_cast<std::size_t>(v)];
      for (int e = 0; e < g.edge_count(); ++e)
        if ((mask >> g.edge(e).u & 1U) != (mask >> g.edge(e).v & 1U)) cut += iw.edge[static_cast<std::size_t>(e)];
      scan.offer(mask, cut, a);
      ++out.subsets;
    }
    out.exact = false;
    if (scan.best_h_num < 0) throw Error(ErrorKind::BudgetExceeded, "sampling produced no proper subset");
  }
  // h = cut/m (both over D); h′ = cut·D/(2ab).
  out.h = Rational(scan.best_h_num, scan.best_h_den);
  out.h_prime = Rational(BigInt(scan.best_hp_cut) * scan.D, BigInt(2) * scan.best_hp_a * scan.best_hp_b);
  out.witness_h = mask_vertices(scan.wit_h, n);
  out.witness_h_prime = mask_vertices(scan.wit_hp, n);
  return out;
}

CheegerInequalityReport check_cheeger_inequality(const WeightedGraph& g) {
  const SpectrumReport spec = spectrum(g);
  const CheegerResult ch = cheeger(g);
  CheegerInequalityReport r;
  r.h = ch.h;
  r.h_prime = ch.h_prime;
  r.lambda_max = spec.interval_circ ? spec.interval_circ->hi : 1.0;
  r.theorem_margin = to_double(ch.h_prime) - (1.0 - r.lambda_max);
  const double hd = to_double(ch.h);
  r.converse_bound = std::sqrt(std::max(0.0, 1.0 - hd * hd / 4.0));
  r.converse_margin = r.converse_bound - r.lambda_max;
  return r;
}

namespace {

struct PairSource {
  int n;
  const MixingOptions& options;
  CounterRng rng;

  template <class Fn>
  void run(Fn&& fn) {
    if (options.exhaustive) {
      if (n > 14) throw BudgetExceeded("exhaustive mixing check", 14, static_cast<std::uint64_t>(n));
      const std::uint64_t count = std::uint64_t{1} << n;
      for (std::uint64_t a = 0; a < count; ++a)
        for (std::uint64_t b = 0; b < count; ++b) fn(a, b);
    } else {
      for (std::uint64_t t = 0; t < options.trials; ++t) {
        std::uint64_t a = 0, b = 0;
        for (int v = 0; v < n; ++v)
          if (rng.coin()) a |= std::uint64_t{1} << v;
        for (int v = 0; v < n; ++v)
          if (rng.coin()) b |= std::uint64_t{1} << v;
        fn(a, b);
      }
    }
  }
};

// Per-A data for the exact identity: 2D·w(x)·(𝒜1_A)(x), computed through the operator.
struct OperatorRow {
  std::vector<std::int64_t> scaled;
  bool integral = true;
};

OperatorRow operator_row(const WeightedGraph& g, std::uint64_t a, std::int64_t D) {
  const int n = g.vertex_count();
  std::vector<Rational> ind(static_cast<std::size_t>(n), Rational(0));
  for (int v = 0; v < n; ++v)
    if (a >> v & 1U) ind[static_cast<std::size_t>(v)] = 1;
  const auto img = adjacency_apply(g, ind);
  OperatorRow row;
  for (int x = 0; x < n; ++x) {
    const Rational val = img[static_cast<std::size_t>(x)] * g.vertex_weight(x) * 2 * D;
    if (boost::multiprecision::denominator(val) != 1) row.integral = false;
    row.scaled.push_back(row.integral ? boost::multiprecision::numerator(val).convert_to<std::int64_t>() : 0);
  }
  return row;
}

struct PairGeometry {
  std::int64_t ord = 0;     // D·w(E_ord(A,B))
  std::int64_t inside = 0;  // D·w(E(A)), edges with both ends in A
  std::int64_t wa = 0, wb = 0;
};

PairGeometry geometry(const WeightedGraph& g, const IntegerWeights& iw, std::uint64_t a, std::uint64_t b) {
  PairGeometry p;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (a >> v & 1U) p.wa += iw.vertex[static_cast<std::size_t>(v)];
    if (b >> v & 1U) p.wb += iw.vertex[static_cast<std::size_t>(v)];
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    const bool ua = a >> u & 1U, va = a >> v & 1U, ub = b >> u & 1U, vb = b >> v & 1U;
    const std::int64_t w = iw.edge[static_cast<std::size_t>(e)];
    p.ord += w * ((ua && vb) + (va && ub));
    if (ua && va) p.inside += w;
  }
  return p;
}

void note_violation(MixingReport& r, const WeightedGraph& g, std::uint64_t a, std::uint64_t b) {
  ++r.violations;
  if (!r.first_violation) r.first_violation = {mask_vertices(a, g.vertex_count()), mask_vertices(b, g.vertex_count())};
}

}  // namespace

MixingReport eml_check(const WeightedGraph& g, const MixingOptions& options) {
  const int n = g.vertex_count();
  const SpectrumReport spec = spectrum(g);
  if (!spec.interval_circ) throw Error(ErrorKind::PreconditionViolated, "mixing lemma needs at least two vertices");
  const IntegerWeights iw = integer_weights(g);
  const double D = static_cast<double>(iw.denominator);
  MixingReport r;
  r.mu = spec.interval_circ->lo;
  r.lambda = spec.interval_circ->hi;
  const double theta = std::max(std::abs(r.mu), std::abs(r.lambda));

  std::uint64_t cached_a = ~std::uint64_t{0};
  OperatorRow row;
  PairSource src{n, options, CounterRng(options.seed)};
  src.run([&](std::uint64_t a, std::uint64_t b) {
    ++r.pairs;
    if (a != cached_a) {
      row = operator_row(g, a, iw.denominator);
      cached_a = a;
    }
    const PairGeometry p = geometry(g, iw, a, b);
    std::int64_t lhs = 0;
    for (int x = 0; x < n; ++x)
      if (b >> x & 1U) lhs += row.scaled[static_cast<std::size_t>(x)];
    if (!row.integral || lhs != p.ord) ++r.identity_failures;

    const double alpha = p.wa / D, beta = p.wb / D;
    const double half_ord = p.ord / (2.0 * D);
    const double slack_i =
        theta * std::sqrt(std::max(0.0, alpha * beta * (1 - alpha) * (1 - beta))) - std::abs(half_ord - alpha * beta);
    r.worst_slack_i = std::min(r.worst_slack_i, slack_i);
    bool bad = slack_i < -options.tolerance;
    if (a == b || options.exhaustive == false) {
      const double inner = p.inside / D - alpha * alpha;
      const double spread = alpha * (1 - alpha);
      const double slack_ii = std::min(inner - r.mu * spread, r.lambda * spread - inner);
      r.worst_slack_ii = std::min(r.worst_slack_ii, slack_ii);
      bad = bad || slack_ii < -options.tolerance;
    }
    if (bad) note_violation(r, g, a, b);
  });
  return r;
}

MixingReport partite_eml_check(const WeightedGraph& g, const MixingOptions& options) {
  const int n = g.vertex_count();
  const auto& part = g.partite();
  if (!part) throw Error(ErrorKind::PreconditionViolated, "partite mixing lemma needs a partite labeling");
  const int classes = g.class_count();
  if (classes < 2) throw Error(ErrorKind::PreconditionViolated, "need at least two classes");
  const SpectrumReport spec = spectrum(g);
  if (!spec.interval_diamond) throw Error(ErrorKind::PreconditionViolated, "empty C0-diamond");
  const IntegerWeights iw = integer_weights(g);
  const double D = static_cast<double>(iw.denominator);
  const double r_ = classes - 1;
  MixingReport rep;
  rep.mu = spec.interval_diamond->lo;
  rep.lambda = std::max(std::abs(spec.interval_diamond->lo), std::abs(spec.interval_diamond->hi));
  const double lam = rep.lambda;

  std::vector<std::uint64_t> class_mask(static_cast<std::size_t>(classes), 0);
  for (int v = 0; v < n; ++v) class_mask[static_cast<std::size_t>((*part)[static_cast<std::size_t>(v)])] |= std::uint64_t{1} << v;
  auto class_weight = [&](std::uint64_t m) {
    std::int64_t s = 0;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1U) s += iw.vertex[static_cast<std::size_t>(v)];
    return s / D;
  };

  std::uint64_t cached_a = ~std::uint64_t{0};
  OperatorRow row;
  PairSource src{n, options, CounterRng(options.seed)};
  src.run([&](std::uint64_t a, std::uint64_t b) {
    ++rep.pairs;
    if (a != cached_a) {
      row = operator_row(g, a, iw.denominator);
      cached_a = a;
    }
    const PairGeometry p = geometry(g, iw, a, b);
    std::int64_t lhs = 0;
    for (int x = 0; x < n; ++x)
      if (b >> x & 1U) lhs += row.scaled[static_cast<std::size_t>(x)];
    if (!row.integral || lhs != p.ord) ++rep.identity_failures;

    const double alpha = p.wa / D, beta = p.wb / D;
    const double half_ord = p.ord / (2.0 * D);
    double cross = 0.0;
    std::uint64_t t_set = 0, s_set = 0;
    for (int c = 0; c < classes; ++c) {
      const std::uint64_t m = class_mask[static_cast<std::size_t>(c)];
      cross += class_weight(a & m) * class_weight(b & m);
      if (a & m) t_set |= std::uint64_t{1} << c;
      if (b & m) s_set |= std::uint64_t{1} << c;
    }
    bool bad = false;
    if ((t_set & s_set) == 0) {
      ++rep.part_i_pairs;
      const double tt = std::popcount(t_set) / (r_ + 1), ss = std::popcount(s_set) / (r_ + 1);
      const double rhs = lam * (r_ + 1) * std::sqrt(std::max(0.0, alpha * beta * (tt - alpha) * (ss - beta)));
      const double slack = rhs - std::abs(half_ord - (r_ + 1) / r_ * alpha * beta);
      rep.worst_slack_i = std::min(rep.worst_slack_i, slack);
      bad = slack < -options.tolerance;
    }
    const double rhs = lam * r_ * std::sqrt(std::max(0.0, alpha * beta * (1 - alpha) * (1 - beta)));
    const double slack = rhs - std::abs(half_ord - (r_ + 1) / r_ * (alpha * beta - cross));
    rep.worst_slack_ii = std::min(rep.worst_slack_ii, slack);
    bad = bad || slack < -options.tolerance;
    if (bad) note_violation(rep, g, a, b);
  });
  return rep;
}

}  // namespace sheafex
