#pragma once

#include "sheafex/cohomology.hpp"

#include <optional>
#include <vector>

namespace sheafex {

/** Z⁰(X, 𝓕) as a code in Σ^{X(0)} via injections 𝓕(v) ↪ Σ. */
struct SheafCode {
  AugmentedSheaf sheaf;
  AbelianGroup alphabet;
  std::vector<Homomorphism> embeddings;  // per vertex, 𝓕(v) → Σ
  std::vector<Cochain> codewords;        // sorted
  BigInt size;

  bool contains(const Cochain& c) const;
  // A Σ-word per codeword.
  std::vector<Element> embed(const Cochain& c) const;
};

/**
 * Enumerates the code. Without explicit embeddings: on the field backend,
 * Σ = F_p^k with k the largest dim 𝓕(v) and the free coordinates of each
 * 𝓕(v) packed into the first ones; on the cyclic backend, all 𝓕(v) must be
 * one relation-free group, which is then Σ. Throws EmbeddingInvalid when a
 * map is not injective or its target is not Σ, and BudgetExceeded.
 */
SheafCode z0_code(const AugmentedSheaf& f, std::optional<AbelianGroup> alphabet = std::nullopt,
                  std::optional<std::vector<Homomorphism>> embeddings = std::nullopt,
                  std::uint64_t budget = kDefaultCochainBudget);

struct CodeRate {
  double value = 0.0;            // log|code| / (n log|Σ|)
  std::optional<Rational> exact;  // when |code| and |Σ| are powers of one prime
};
CodeRate code_rate(const SheafCode& code);

// min ‖g‖ over nonzero codewords (1 for a one-word code).
Rational code_distance(const SheafCode& code);

struct TesterReport {
  bool exhaustive = true;
  bool over_alphabet = false;  // words range over Σ^{X(0)} rather than Π𝓕(v)
  double rate = 0.0;
  std::optional<Rational> rate_exact;  // when |code| and |Σ| are powers of one prime
  Rational distance;
  bool soundness_unconstrained = false;
  Rational soundness;                  // exact, or an upper bound in sampled mode
  std::optional<Word> witness;
  std::optional<Word> nearest;
  std::uint64_t evaluated = 0;
};

/**
 * Rate log|code|/(n log|Σ|), relative distance, and the natural tester's
 * soundness min (rejection probability)/dist(f, code) over words f outside
 * the code. With `over_alphabet`, words range over Σ^{X(0)} and a read
 * outside the image of 𝓕(v) rejects.
 */
TesterReport tester_metrics(const SheafCode& code, std::optional<SampleSpec> sampled = std::nullopt,
                            bool over_alphabet = false, std::uint64_t budget = kDefaultCochainBudget);

// Probability that the tester rejects the Σ-word; reads outside an image reject.
Rational rejection_probability(const SheafCode& code, const std::vector<Element>& word);

struct LineForestResult {
  Rational value;           // min ‖d₀f‖/dist(f, B⁰) over all 0-cochains outside B⁰
  Rational coboundary_norm;
  Rational distance;
  int max_agreement = 0;    // vertices agreeing with the nearest coboundary
  Cochain witness;          // a word of R̄/𝓖 attaining `value`
  std::vector<std::vector<int>> hubs;  // vertex sets whose cosets share a point, size >= 2
  bool certified = false;   // witness rebuilt as a word and re-evaluated to `value`
};

/**
 * Exact cb₀ of R̄/𝓖 when every R_v has order <= 2, every R_e is zero, the
 * R_v are linearly disjoint and vertex weights are uniform. A 0-cochain picks
 * a coset x_v + R_v per vertex; these cosets are the edges (or, for R_v = 0,
 * pendant points) of a forest whose nodes are points of R, an edge uv is
 * satisfied iff the cosets of u and v share a point, and the distance to B⁰
 * is governed by the largest number of cosets through one point. The
 * minimum is taken over all such forests by a subset dynamic program
 * (about 4^n steps per agreement cap), and the optimal forest is realized as
 * an explicit word and re-evaluated. Needs n <= 13.
 */
LineForestResult line_forest_min_ratio(const WeightedGraph& g, const SubgroupAssignment& assignment,
                                       std::uint64_t budget = kDefaultCochainBudget);

struct IntroLtc {
  SubgroupAssignment assignment;
  AugmentedSheaf sheaf;  // R̄/𝓖 with 𝓕(∅) = R
  TheoremBound claim;    // partite or plain bound evaluated on the graph
};

/**
 * R = F₂^m with R_{v_i} = F₂e_i for the first m vertices and all other
 * subgroups zero. Throws PreconditionViolated unless the graph is regular
 * with canonical weights and m <= n.
 */
IntroLtc intro_ltc(const WeightedGraph& g, int m);

}  // namespace sheafex
