#pragma once

#include "sheafex/graph.hpp"
#include "sheafex/linalg.hpp"
#include "sheafex/rng.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sheafex {

// (𝒜f)(x) = Σ_{e∋x} w(e)/(2w(x)) · f(e−x).
std::vector<Rational> adjacency_apply(const WeightedGraph& g, const std::vector<Rational>& f);
std::vector<double> adjacency_apply(const WeightedGraph& g, const std::vector<double>& f);
// Δf = f − 𝒜f.
std::vector<Rational> laplacian_apply(const WeightedGraph& g, const std::vector<Rational>& f);
std::vector<double> laplacian_apply(const WeightedGraph& g, const std::vector<double>& f);

// ⟨f,g⟩ = (1/(i+1)!) Σ_{x∈X(i)} w(x) f(x) g(x) for i ∈ {0, 1}.
Rational inner_product(const WeightedGraph& g, int dim, const std::vector<Rational>& f,
                       const std::vector<Rational>& h);
double inner_product(const WeightedGraph& g, int dim, const std::vector<double>& f, const std::vector<double>& h);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct SpectrumReport {
  std::vector<double> eigenvalues;                // descending
  std::vector<std::vector<double>> eigenvectors;  // vertex functions, unit in the weighted norm
  std::vector<double> residuals;                  // ‖Sv − θv‖ per eigenpair of the symmetrized matrix
  std::optional<Interval> interval_circ;          // Spec 𝒜 on C⁰∘; absent for a single vertex
  std::optional<Interval> interval_diamond;       // Spec 𝒜 on C⁰⋄; present with a partite labeling
  double lambda = 0.0;                            // smallest λ ≥ 0 with Spec on C⁰∘ ⊆ [−λ, λ]
  int sweeps = 0;
};

// Symmetrized matrix D^{1/2} M D^{-1/2}, M the matrix of 𝒜 in the vertex basis.
DenseMatrix symmetrized_adjacency(const WeightedGraph& g);

/**
 * Eigen-decomposition of 𝒜. Throws ConvergenceFailure when a residual
 * exceeds `residual_tolerance` after the sweep cap.
 */
SpectrumReport spectrum(const WeightedGraph& g, double residual_tolerance = 1e-9);

// Vertex indices of a subset bitmask.
std::vector<int> mask_vertices(std::uint64_t mask, int n);

struct CheegerResult {
  Rational h;
  Rational h_prime;
  std::vector<int> witness_h;        // lexicographically smallest minimizer
  std::vector<int> witness_h_prime;
  bool exact = true;                 // false: sampled upper bounds
  std::uint64_t subsets = 0;
};

struct SampleOptions {
  std::uint64_t seed = 1;
  std::uint64_t trials = 10000;
};

/**
 * h = min w(E(S,Sᶜ))/min(w(S),w(Sᶜ)) and h′ = min w(E(S,Sᶜ))/(2w(S)w(Sᶜ)).
 * Exact Gray-code scan when n <= cap; above the cap, throws BudgetExceeded
 * unless `sampled` is given, in which case the minima are upper bounds.
 */
CheegerResult cheeger(const WeightedGraph& g, std::optional<SampleOptions> sampled = std::nullopt, int cap = 22);

struct CheegerInequalityReport {
  Rational h;
  Rational h_prime;
  double lambda_max = 0.0;        // top of the C⁰∘ interval
  double theorem_margin = 0.0;    // h′ − (1 − λmax)
  double converse_bound = 0.0;    // sqrt(1 − h²/4)
  double converse_margin = 0.0;   // converse_bound − λmax
  bool holds(double tolerance) const { return theorem_margin >= -tolerance && converse_margin >= -tolerance; }
};

CheegerInequalityReport check_cheeger_inequality(const WeightedGraph& g);

struct MixingOptions {
  bool exhaustive = true;
  std::uint64_t seed = 1;
  std::uint64_t trials = 2000;
  double tolerance = 1e-9;
};

struct MixingReport {
  std::uint64_t pairs = 0;
  std::uint64_t identity_failures = 0;  // exact adjacency identity ⟨𝒜1_A,1_B⟩ = ½w(E_ord(A,B))
  std::uint64_t violations = 0;         // inequalities failing beyond tolerance
  std::uint64_t part_i_pairs = 0;       // pairs where the disjoint-class inequality applied (partite)
  double worst_slack_i = 1e300;         // min of (right side − left side)
  double worst_slack_ii = 1e300;
  double mu = 0.0;
  double lambda = 0.0;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> first_violation;
  bool ok() const { return identity_failures == 0 && violations == 0; }
};

// Weighted mixing lemma with (μ, λ) from the C⁰∘ interval. Exhaustive mode needs n <= 14.
MixingReport eml_check(const WeightedGraph& g, const MixingOptions& options);
// Partite mixing lemma with λ from the C⁰⋄ interval; needs a partite labeling.
MixingReport partite_eml_check(const WeightedGraph& g, const MixingOptions& options);

}  // namespace sheafex
