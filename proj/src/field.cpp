#include "sheafex/field.hpp"

#include "sheafex/error.hpp"

#include <map>

namespace sheafex {

std::optional<std::pair<int, int>> prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, e);
}

namespace {

// Conway polynomials, constant term first.
const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> t = {
      {{2, 2}, {1, 1, 1}},          {{2, 3}, {1, 1, 0, 1}},       {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}}, {{2, 6}, {1, 1, 0, 1, 1, 0, 1}}, {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},       {{5, 2}, {2, 4, 1}},          {{7, 2}, {3, 6, 1}},
  };
  return t;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
  const auto pe = prime_power(q);
  if (!pe || q > 64) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power in [2, 64]");
  p_ = pe->first;
  e_ = pe->second;
  if (e_ == 1) {
    modulus_ = {0, 1};
  } else {
    modulus_ = conway_table().at({p_, e_});
  }
  const auto n = static_cast<std::size_t>(q_);
  add_.assign(n * n, 0);
  mul_.assign(n * n, 0);
  neg_.assign(n, 0);
  for (int a = 0; a < q_; ++a) {
    const Element va = to_vector(a);
    Element vn(va.size());
    for (std::size_t i = 0; i < va.size(); ++i) vn[i] = (p_ - va[i]) % p_;
    neg_[static_cast<std::size_t>(a)] = from_vector(vn);
    for (int b = 0; b < q_; ++b) {
      const Element vb = to_vector(b);
      Element s(va.size());
      for (std::size_t i = 0; i < va.size(); ++i) s[i] = (va[i] + vb[i]) % p_;
      add_[idx(a, b)] = from_vector(s);
      // Schoolbook product, then reduction by the monic modulus.
      std::vector<std::int64_t> prod(static_cast<std::size_t>(2 * e_ - 1 > 0 ? 2 * e_ - 1 : 1), 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j)
          prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + va[static_cast<std::size_t>(i)] * vb[static_cast<std::size_t>(j)]) % p_;
      for (int k = static_cast<int>(prod.size()) - 1; k >= e_; --k) {
        const std::int64_t c = prod[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        for (int i = 0; i <= e_; ++i) {
          auto& slot = prod[static_cast<std::size_t>(k - e_ + i)];
          slot = ((slot - c * modulus_[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
        }
      }
      prod.resize(static_cast<std::size_t>(e_));
      mul_[idx(a, b)] = from_vector(prod);
    }
  }
}

int FiniteField::inv(int a) const {
  if (a == 0) throw Error(ErrorKind::PreconditionViolated, "zero has no inverse");
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw Error(ErrorKind::PreconditionViolated, "element has no inverse; modulus not irreducible");
}

int FiniteField::pow(int a, std::uint64_t k) const {
  int r = 1;
  while (k) {
    if (k & 1U) r = mul(r, a);
    a = mul(a, a);
    k >>= 1U;
  }
  return r;
}

int FiniteField::primitive_element() const {
  for (int g = 1; g < q_; ++g) {
    int x = g, ord = 1;
    while (x != 1) {
      x = mul(x, g);
      ++ord;
    }
    if (ord == q_ - 1) return g;
  }
  throw Error(ErrorKind::PreconditionViolated, "no primitive element");
}

Element FiniteField::to_vector(int a) const {
  Element v(static_cast<std::size_t>(e_));
  for (int i = 0; i < e_; ++i) {
    v[static_cast<std::size_t>(i)] = a % p_;
    a /= p_;
  }
  return v;
}

int FiniteField::from_vector(const Element& v) const {
  int a = 0;
  for (std::size_t i = v.size(); i-- > 0;) a = a * p_ + static_cast<int>(mod(v[i], p_));
  return a;
}

std::vector<std::vector<std::int64_t>> FiniteField::multiplication_matrix(int a) const {
  const auto n = static_cast<std::size_t>(e_);
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  int basis = 1;
  for (std::size_t c = 0; c < n; ++c) {
    const Element col = to_vector(mul(a, basis));
    for (std::size_t r = 0; r < n; ++r) m[r][c] = col[r];
    basis *= p_;
  }
  return m;
}

}  // namespace sheafex
