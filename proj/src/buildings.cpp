#include "sheafex/buildings.hpp"

#include "sheafex/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace sheafex {

namespace {

std::vector<std::vector<int>> rref(const FiniteField& f, std::vector<std::vector<int>> m, int cols) {
  std::size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][static_cast<std::size_t>(c)] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const int iv = f.inv(m[row][static_cast<std::size_t>(c)]);
    for (auto& x : m[row]) x = f.mul(x, iv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      const int k = m[r][static_cast<std::size_t>(c)];
      if (r == row || k == 0) continue;
      for (int j = 0; j < cols; ++j)
        m[r][static_cast<std::size_t>(j)] = f.sub(m[r][static_cast<std::size_t>(j)], f.mul(k, m[row][static_cast<std::size_t>(j)]));
    }
    ++row;
  }
  m.resize(row);
  return m;
}

int pivot_of(const std::vector<int>& row) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) return static_cast<int>(j);
  return -1;
}

}  // namespace

Subspace span(const FiniteField& f, int ambient, const std::vector<std::vector<int>>& vectors) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient) throw Error(ErrorKind::TypeMismatch, "vector length differs from ambient dimension");
  return Subspace{ambient, rref(f, vectors, ambient)};
}

std::vector<Subspace> subspaces(const FiniteField& f, int ambient, int k, std::uint64_t cap) {
  std::vector<Subspace> out;
  if (k < 0 || k > ambient) return out;
  const int q = f.order();
  // Pivot sets as increasing k-tuples, lexicographic.
  std::vector<int> piv(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) piv[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<std::pair<int, int>> free;  // (row, column) of unconstrained entries
    for (int i = 0; i < k; ++i)
      for (int c = piv[static_cast<std::size_t>(i)] + 1; c < ambient; ++c)
        if (!std::binary_search(piv.begin(), piv.end(), c)) free.emplace_back(i, c);
    std::vector<int> digits(free.size(), 0);
    while (true) {
      Subspace s{ambient, std::vector<std::vector<int>>(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(ambient), 0))};
      for (int i = 0; i < k; ++i) s.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = 1;
      for (std::size_t t = 0; t < free.size(); ++t)
        s.rows[static_cast<std::size_t>(free[t].first)][static_cast<std::size_t>(free[t].second)] = digits[t];
      if (out.size() >= cap) throw BudgetExceeded("subspace enumeration", cap, out.size() + 1);
      out.push_back(std::move(s));
      std::size_t t = free.size();
      while (t > 0 && digits[t - 1] == q - 1) digits[--t] = 0;
      if (t == 0) break;
      ++digits[t - 1];
    }
    int i = k - 1;
    while (i >= 0 && piv[static_cast<std::size_t>(i)] == ambient - k + i) --i;
    if (i < 0) break;
    ++piv[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

bool contains(const FiniteField& f, const Subspace& big, const Subspace& small) {
  for (auto v : small.rows) {
    for (const auto& row : big.rows) {
      const int p = pivot_of(row);
      const int k = v[static_cast<std::size_t>(p)];
      if (k == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(k, row[j]));
    }
    if (pivot_of(v) >= 0) return false;
  }
  return true;
}

BigInt gaussian_binomial(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= BigInt(pow(BigInt(q), static_cast<unsigned>(n - i))) - 1;
    den *= BigInt(pow(BigInt(q), static_cast<unsigned>(i + 1))) - 1;
  }
  return num / den;
}

std::string subspace_name(const Subspace& s) {
  std::ostringstream out;
  out << s.dimension() << ':';
  bool first = true;
  for (const auto& row : s.rows)
    for (int x : row) {
      if (!first) out << '.';
      out << x;
      first = false;
    }
  return out.str();
}

WeightedComplex build_An(int q, int n, std::uint64_t cap) {
  if (n < 2) throw Error(ErrorKind::PreconditionViolated, "A_n needs n >= 2");
  const FiniteField f(q);
  const int ambient = n + 1;
  std::vector<std::vector<Subspace>> level(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n; ++k) level[static_cast<std::size_t>(k)] = subspaces(f, ambient, k, cap);
  // below[k][j]: indices of (k−1)-subspaces inside the j-th k-subspace.
  std::vector<std::vector<std::vector<int>>> below(static_cast<std::size_t>(n + 1));
  for (int k = 2; k <= n; ++k) {
    const auto& hi = level[static_cast<std::size_t>(k)];
    const auto& lo = level[static_cast<std::size_t>(k - 1)];
    auto& b = below[static_cast<std::size_t>(k)];
    b.resize(hi.size());
    for (std::size_t j = 0; j < hi.size(); ++j)
      for (std::size_t i = 0; i < lo.size(); ++i)
        if (contains(f, hi[j], lo[i])) b[j].push_back(static_cast<int>(i));
  }
  std::vector<std::vector<std::string>> tops;
  std::vector<std::string> chain(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int k, int j) -> void {
    chain[static_cast<std::size_t>(k - 1)] = subspace_name(level[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
    if (k == 1) {
      if (tops.size() >= cap) throw BudgetExceeded("maximal flags", cap, tops.size() + 1);
      tops.push_back(chain);
      return;
    }
    for (int i : below[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) self(self, k - 1, i);
  };
  for (std::size_t j = 0; j < level[static_cast<std::size_t>(n)].size(); ++j) rec(rec, n, static_cast<int>(j));
  Complex shell = Complex::build(tops);
  std::vector<int> partite(shell.vertex_count());
  for (std::size_t v = 0; v < partite.size(); ++v) {
    const std::string& name = shell.vertex_names()[v];
    partite[v] = std::stoi(name.substr(0, name.find(':'))) - 1;
  }
  return canonical_weights(shell, std::move(partite));
}

int thickness(const WeightedComplex& x) {
  const int d = x.dimension();
  if (d < 1) return static_cast<int>(x.faces(d).size());
  std::map<Face, int> count;
  for (const auto& face : x.faces(d - 1)) count[face] = 0;
  for (const auto& top : x.faces(d))
    for (std::size_t drop = 0; drop < top.size(); ++drop) {
      Face sub = top;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      ++count[sub];
    }
  int best = -1;
  for (const auto& [face, c] : count)
    if (best < 0 || c < best) best = c;
  return best;
}

int CoxeterDiagram::m() const {
  int out = 2;
  for (const auto& b : bonds) out = std::max(out, b.label);
  return out;
}

CoxeterDiagram CoxeterDiagram::preset(const std::string& name) {
  CoxeterDiagram d;
  d.name = name;
  if (name.size() >= 2 && name[0] == 'A') {
    const int n = std::stoi(name.substr(1));
    if (n < 1) throw Error(ErrorKind::InvalidInput, "A_n needs n >= 1");
    d.rank = n;
    for (int i = 0; i + 1 < n; ++i) d.bonds.push_back({i, i + 1, 3});
  } else if (name == "C2") {
    d.rank = 2;
    d.bonds = {{0, 1, 4}};
  } else if (name == "C3") {
    d.rank = 3;
    d.bonds = {{0, 1, 3}, {1, 2, 4}};
  } else if (name == "G2") {
    d.rank = 2;
    d.bonds = {{0, 1, 6}};
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown Coxeter diagram '" + name + "' (use A<n>, C2, C3, G2)");
  }
  return d;
}

double theorem72_bound(double q, int r, int m) {
  if (r < 1 || m < 2) throw Error(ErrorKind::PreconditionViolated, "need r >= 1 and m >= 2");
  if (q < static_cast<double>(r) * r * (m - 2))
    throw Error(ErrorKind::PreconditionViolated, "need q >= r^2(m-2)");
  const double root = std::sqrt(static_cast<double>(m - 2));
  return root / (std::sqrt(q) - (r - 1) * root);
}

CorollaryBounds corollary_bounds(double q, int r, int m) {
  const double lambda = theorem72_bound(q, r, m);
  const double rr = r;
  const double head = 2 * rr / (5 * rr + 2) - (4 * rr * rr * rr + 4 * rr) * lambda / (5 * rr + 2);
  CorollaryBounds b;
  b.cor74 = 1 - lambda;
  b.cor76 = head - (14 * rr + 4) / ((5 * rr + 2) * (q + rr - 1));
  b.cor76_refined = r == 1 ? head - 2 / (q + rr - 1) : b.cor76;
  return b;
}

Lemma75Report check_lemma75(const WeightedComplex& x, int q) {
  Lemma75Report rep;
  rep.q = q;
  rep.r = x.dimension();
  rep.bound = Rational(2, q + rep.r - 1);
  rep.max_ratio = 0;
  const auto& edges = x.faces(1);
  for (std::size_t e = 0; e < edges.size(); ++e)
    for (int v : edges[e]) {
      const Rational ratio = x.weight(1, e) / x.weight(Face{v});
      if (ratio > rep.max_ratio) rep.max_ratio = ratio;
    }
  rep.slack = rep.bound - rep.max_ratio;
  return rep;
}

std::vector<ThresholdRow> table77() {
  struct Spec {
    const char* type;
    const char* formula;
  };
  const Spec specs[] = {
      {"A2", "2/7 - 8/(7 sqrt(q)) - 2/q"},
      {"C2", "2/7 - 8 sqrt(2)/(7 sqrt(q)) - 2/q"},
      {"G2", "2/7 - 16/(7 sqrt(q)) - 2/q"},
      {"A3", "1/3 - 10/(3(sqrt(q) - 1)) - 8/(3(q + 1))"},
      {"C3", "1/3 - 10 sqrt(2)/(3(sqrt(q) - sqrt(2))) - 8/(3(q + 1))"},
  };
  std::vector<ThresholdRow> rows;
  for (const auto& s : specs) {
    const CoxeterDiagram d = CoxeterDiagram::preset(s.type);
    int q = std::max(2, d.r() * d.r() * (d.m() - 2));
    while (corollary_bounds(q, d.r(), d.m()).cor76_refined <= 0) ++q;
    rows.push_back({d.r(), s.type, s.formula, q});
  }
  return rows;
}

std::string table77_csv() {
  std::ostringstream out;
  out << "dim,type,bound,positive_if\n";
  for (const auto& r : table77()) out << r.dimension << ',' << r.type << ",\"" << r.formula << "\",q>=" << r.threshold << '\n';
  return out.str();
}

}  // namespace sheafex
