#pragma once

#include "sheafex/group.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sheafex {

/**
 * GF(q), q = p^e <= 64. Element k encodes the polynomial whose coefficient
 * of x^i is the i-th base-p digit of k, reduced modulo a fixed irreducible
 * polynomial of degree e.
 */
class FiniteField {
 public:
  // Throws NotPrimePower unless q is a prime power in [2, 64].
  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return e_; }
  // Coefficients of the modulus, constant term first (monic, length e+1).
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  // Throws PreconditionViolated for 0.
  int inv(int a) const;
  int pow(int a, std::uint64_t k) const;

  // Smallest element generating the multiplicative group.
  int primitive_element() const;

  // The additive group F_p^e, coordinates = base-p digits.
  AbelianGroup additive_group() const { return AbelianGroup::field(p_, e_); }
  Element to_vector(int a) const;
  int from_vector(const Element& v) const;
  // Matrix of x ↦ a·x on the additive group.
  std::vector<std::vector<std::int64_t>> multiplication_matrix(int a) const;

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b); }

  int q_ = 0, p_ = 0, e_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_;
};

// (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power(int q);

}  // namespace sheafex
