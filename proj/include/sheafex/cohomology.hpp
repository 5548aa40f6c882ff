#pragma once

#include "sheafex/sheaf.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sheafex {

/** Group element per face of one dimension (−1, 0 or 1). */
struct Cochain {
  int degree = 0;
  std::vector<Element> values;
  bool operator==(const Cochain& other) const { return degree == other.degree && values == other.values; }
};

// C^i as one product group (i ∈ {−1, 0, 1}).
AbelianGroup cochain_group(const AugmentedSheaf& f, int degree);
Element flatten(const Cochain& c);
Cochain unflatten(const AugmentedSheaf& f, int degree, const Element& x);
Cochain zero_cochain(const AugmentedSheaf& f, int degree);

/**
 * d_{−1} or d₀: (d₋₁h)(v) = res_{v←∅}h, (d₀f)(e) = res_{e←e⁺}f(e⁺) − res_{e←e⁻}f(e⁻).
 * Throws TypeMismatch when a value is not a canonical element of its face group.
 */
Cochain coboundary(const AugmentedSheaf& f, const Cochain& c);

// w(supp c), exact.
Rational support_norm(const AugmentedSheaf& f, const Cochain& c);

struct CohomologySummary {
  BigInt b0_order;
  BigInt z0_order;
  BigInt h0_order;
  std::vector<Cochain> b0_generators;
  std::vector<Cochain> z0_generators;
  bool d0_after_dminus1_zero = true;
  std::uint64_t d0_after_dminus1_checked = 0;
};

/**
 * Orders come from echelon forms of the images of d₋₁ and d₀ (no enumeration).
 * Z⁰ generators: a nullspace basis over F_p on the field backend, otherwise
 * a generating subset of the enumerated cocycles (budgeted).
 */
CohomologySummary cohomology_spaces(const AugmentedSheaf& f, std::uint64_t budget = kDefaultCochainBudget);

// Elements of B⁰ and Z⁰, sorted and distinct; throw BudgetExceeded.
std::vector<Cochain> b0_elements(const AugmentedSheaf& f, std::uint64_t budget = kDefaultCochainBudget);
std::vector<Cochain> z0_elements(const AugmentedSheaf& f, std::uint64_t budget = kDefaultCochainBudget);

struct DistanceResult {
  Rational distance;
  Cochain nearest;
};

// min over b ∈ B⁰ of ‖f − b‖, with the nearest element of smallest index.
DistanceResult dist_to_B0(const AugmentedSheaf& f, const Cochain& c, std::uint64_t budget = kDefaultCochainBudget);

struct SampleSpec {
  std::uint64_t seed = 1;
  std::uint64_t trials = 10000;
};

// Vertex words: per vertex a value index in a per-vertex group, per edge two lookup tables.
inline constexpr std::uint32_t kReject = 0xffffffffU;

struct WordSpace {
  std::vector<AbelianGroup> domain;               // per vertex
  std::vector<std::vector<std::uint32_t>> minus;  // per edge: value index at e⁻ → edge value, or kReject
  std::vector<std::vector<std::uint32_t>> plus;   // per edge: value index at e⁺ → edge value, or kReject
};

WordSpace word_space(const AugmentedSheaf& f);
using Word = std::vector<std::uint64_t>;
Word to_word(const AugmentedSheaf& f, const Cochain& c);
Cochain from_word(const AugmentedSheaf& f, const Word& w);

struct RatioSearch {
  bool exhaustive = true;
  bool unconstrained = true;  // no word at positive distance was seen
  Rational value;             // ‖d₀f‖ / dist(f, S) at the witness
  Rational coboundary_norm;
  Rational distance;
  Word witness;
  Word nearest;
  std::uint64_t evaluated = 0;
};

/**
 * min ‖d₀f‖/dist(f, S) over words f with dist(f, S) > 0, where S is a
 * subgroup of words (given as its element list) and an edge counts as
 * violated when its two table values differ or either is kReject.
 * Exhaustive mode scans the transversal of S made of coset minima; its size
 * |C⁰|/|S| must not exceed `budget`. The first minimizer in that order is
 * reported. Sampled mode draws uniform words and returns an upper bound.
 */
RatioSearch min_ratio(const WeightedGraph& g, const WordSpace& space, const std::vector<Word>& subgroup,
                      std::optional<SampleSpec> sampled, std::uint64_t budget = kDefaultCochainBudget);

struct ExpansionResult {
  bool exhaustive = true;
  bool unconstrained = false;  // C⁰ = B⁰: reported as +∞
  Rational value;              // exact in exhaustive mode; an upper bound in sampled mode
  std::optional<Cochain> witness;
  std::optional<Cochain> nearest;
  Rational coboundary_norm;
  Rational distance;
  std::uint64_t evaluated = 0;
};

ExpansionResult cb0(const AugmentedSheaf& f, std::optional<SampleSpec> sampled = std::nullopt,
                    std::uint64_t budget = kDefaultCochainBudget);

struct CosystolicReport {
  bool exhaustive = true;
  // Largest ε with (C1), i.e. min ‖d₀f‖/dist(f, Z⁰); +∞ when Z⁰ = C⁰.
  bool epsilon_unconstrained = false;
  Rational epsilon_max;
  std::optional<Cochain> c1_witness;
  // Largest δ with (C2): min ‖g‖ over Z⁰ − B⁰, or 1 when Z⁰ = B⁰.
  bool delta_vacuous = false;
  Rational delta_max;
  std::optional<Cochain> c2_witness;
  double epsilon = 0.0;
  double delta = 0.0;
  bool c1_holds = false;
  bool c2_holds = false;
  bool holds() const { return c1_holds && c2_holds; }
};

CosystolicReport cosystolic_check(const AugmentedSheaf& f, double epsilon, double delta,
                                  std::optional<SampleSpec> sampled = std::nullopt,
                                  std::uint64_t budget = kDefaultCochainBudget);

struct TheoremInputs {
  double lambda = 0.0;
  double mu = 0.0;
  double t = 0.0;
  double s = 0.0;
  std::optional<int> r;  // partite variant when present
  bool s_elided = false;
};

struct TheoremBound {
  double value = 0.0;
  TheoremInputs inputs;
  std::string formula;
};

/**
 * (2 − 4λ − 4max{|λ|,|μ|} − 5t − 2s)/(5 − 2λ), or with r:
 * (2r − 4rλ − 4r²max{|λ|,|μ|} − (5r+2)t − 2rs)/(5r + 2 − 2rλ).
 * s is taken as 0 when s_elided. Throws PreconditionViolated when λ < μ,
 * r < 1, or (partite) λ < −1/r.
 */
TheoremBound theorem_bound(const TheoremInputs& in);

/**
 * Inputs measured on a graph: (μ, λ) from the C⁰∘ interval, or from C⁰⋄ when
 * `partite`; t and s from the weights; s elided when all edges share one
 * weight or when all subgroups of `assignment` are linearly disjoint.
 */
TheoremInputs theorem_inputs(const WeightedGraph& g, const SubgroupAssignment* assignment, bool partite);

/**
 * For a cycle graph with linearly disjoint subgroups and a cocycle f of R̄/𝓖,
 * h ∈ R with f(v) = h + R_v for all v, built by telescoping around the cycle.
 * Throws NotCocycle or DisjointnessViolated.
 */
Element solve_cycle_cocycle(const WeightedGraph& g, const SubgroupAssignment& assignment, const Cochain& f);

struct CosystolicClaim {
  Rational epsilon;
  Rational delta;        // min of ‖d₋₁h‖ over h ∈ 𝓕(∅) with d₋₁h ≠ 0 (0 when there is none)
  bool vacuous = false;  // 𝓕(∅) = 0
  bool converse_applies = false;  // H⁰(X, 𝓕) = 0
};

// Coboundary expansion ε of 𝓕 turned into an (ε, δ) cosystolic claim for 𝓕₀.
CosystolicClaim remark42_convert(const Rational& cb0_value, const AugmentedSheaf& f,
                                 std::uint64_t budget = kDefaultCochainBudget);

}  // namespace sheafex
