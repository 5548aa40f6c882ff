#pragma once

#include "sheafex/error.hpp"
#include "sheafex/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sheafex {

// Coordinate vector in Z/m_0 × … × Z/m_{j−1}.
using Element = std::vector<std::int64_t>;

/**
 * Subgroup of a product of cyclic groups in column echelon form: for each
 * coordinate c at most one pivot row that vanishes before c and has entry
 * d_c | m_c at c. Every element of the subgroup that vanishes before c has
 * its c-entry in d_c·Z, which makes reduce() canonical.
 */
class Echelon {
 public:
  Echelon() = default;
  Echelon(std::vector<std::int64_t> moduli, const std::vector<Element>& generators);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  // d_c per coordinate (m_c when the column has no pivot).
  const std::vector<std::int64_t>& steps() const { return steps_; }
  BigInt order() const;
  // Pivot rows, in column order.
  std::vector<Element> rows() const;

  // Canonical representative of x + H with 0 <= x_c < d_c.
  Element reduce(Element x) const;
  bool contains(const Element& x) const;

 private:
  std::vector<std::int64_t> moduli_;
  std::vector<std::int64_t> steps_;
  std::vector<std::optional<Element>> pivots_;
};

/**
 * Finite abelian group Z/m_0 × … × Z/m_{j−1} modulo a subgroup of relations.
 * The prime-field backend F_p^k has all moduli p and records p; the cyclic
 * backend allows arbitrary moduli >= 1. Elements are canonical coordinate
 * vectors, so equality of elements is equality of vectors.
 */
class AbelianGroup {
 public:
  AbelianGroup() : AbelianGroup(std::vector<std::int64_t>{}) {}
  explicit AbelianGroup(std::vector<std::int64_t> moduli, const std::vector<Element>& relations = {},
                        std::optional<int> prime = std::nullopt);

  static AbelianGroup field(int p, int k);
  static AbelianGroup cyclic(std::vector<std::int64_t> moduli);

  int rank() const { return static_cast<int>(relations_.moduli().size()); }
  const std::vector<std::int64_t>& moduli() const { return relations_.moduli(); }
  const std::optional<int>& prime() const { return prime_; }
  bool is_field_backend() const { return prime_.has_value(); }
  const Echelon& relations() const { return relations_; }

  BigInt order() const { return product_order() / relations_.order(); }
  // Order as an integer; throws BudgetExceeded beyond 2^62.
  std::uint64_t small_order() const;

  // Validates arity and reduces; throws TypeMismatch on wrong arity.
  Element normalize(Element x) const;
  bool is_canonical(const Element& x) const;
  Element zero() const { return Element(static_cast<std::size_t>(rank()), 0); }
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element scale(std::int64_t k, const Element& a) const;
  bool is_zero(const Element& a) const;
  // Additive order of an element.
  std::int64_t element_order(const Element& a) const;

  // Mixed-radix index of a canonical element, and its inverse.
  std::uint64_t index(const Element& canonical) const;
  Element element(std::uint64_t index) const;
  // All elements in index order; throws BudgetExceeded past `cap`.
  std::vector<Element> elements(std::uint64_t cap = kDefaultCochainBudget) const;

  // This group modulo the subgroup generated by `generators`.
  AbelianGroup quotient(const std::vector<Element>& generators) const;
  // |<generators>| inside this group.
  BigInt subgroup_order(const std::vector<Element>& generators) const;
  // Elements of <generators>, sorted by index; throws BudgetExceeded past `cap`.
  std::vector<Element> subgroup_elements(const std::vector<Element>& generators,
                                         std::uint64_t cap = kDefaultCochainBudget) const;
  bool in_subgroup(const std::vector<Element>& generators, const Element& x) const;

  // Same coordinate moduli (so elements of one are valid coordinate vectors of the other).
  bool same_coordinates(const AbelianGroup& other) const { return moduli() == other.moduli(); }
  bool operator==(const AbelianGroup& other) const;
  std::string describe() const;

 private:
  BigInt product_order() const;
  // Echelon of the relations together with `generators` in the product group.
  Echelon with_generators(const std::vector<Element>& generators) const;

  Echelon relations_;
  std::optional<int> prime_;
  std::vector<std::int64_t> radix_;  // steps of relations_
};

/**
 * Homomorphism given by an integer matrix (target rank × source rank) acting
 * on coordinate vectors, followed by reduction in the target. Construction
 * checks that every source relation maps to zero and throws TypeMismatch
 * otherwise.
 */
class Homomorphism {
 public:
  Homomorphism(AbelianGroup source, AbelianGroup target, std::vector<std::vector<std::int64_t>> matrix);

  static Homomorphism identity(const AbelianGroup& g);
  static Homomorphism zero(const AbelianGroup& source, const AbelianGroup& target);
  // Identity on coordinates into a group with the same moduli and more relations.
  static Homomorphism projection(const AbelianGroup& source, const AbelianGroup& target);

  const AbelianGroup& source() const { return source_; }
  const AbelianGroup& target() const { return target_; }
  const std::vector<std::vector<std::int64_t>>& matrix() const { return matrix_; }

  Element apply(const Element& x) const;
  // g ∘ f where *this is f; requires g.source() == f.target().
  Homomorphism then(const Homomorphism& g) const;
  // Equality as maps (compared on the coordinate generators of the source).
  bool same_map(const Homomorphism& other) const;
  // Images of all source elements by index; throws BudgetExceeded past `cap`.
  std::vector<std::uint32_t> table(std::uint64_t cap = std::uint64_t{1} << 22) const;
  // Kernel elements (enumerated); throws BudgetExceeded past `cap`.
  std::vector<Element> kernel(std::uint64_t cap = kDefaultCochainBudget) const;

 private:
  AbelianGroup source_;
  AbelianGroup target_;
  std::vector<std::vector<std::int64_t>> matrix_;
};

struct DisjointnessReport {
  bool disjoint = true;
  // When not disjoint: a nonzero tuple (r_i) with r_i ∈ R_i summing to zero.
  std::optional<std::vector<Element>> certificate;
  // Index of the first subgroup meeting the sum of the earlier ones.
  int first_overlap = -1;
};

/**
 * Whether the summation map ⊕R_i → R is injective, decided by comparing
 * |ΣR_i| with Π|R_i|. Subgroups are given by generator lists.
 */
DisjointnessReport check_linear_disjoint(const AbelianGroup& ambient,
                                         const std::vector<std::vector<Element>>& subgroups,
                                         std::uint64_t cap = kDefaultCochainBudget);

std::int64_t mod(std::int64_t a, std::int64_t m);

}  // namespace sheafex
