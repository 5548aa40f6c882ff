#pragma once

#include "sheafex/field.hpp"
#include "sheafex/graph.hpp"
#include "sheafex/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sheafex {

/**
 * Augmented sheaf on a graph: a group on ∅, on every vertex and on every
 * edge, with restriction maps v←∅, e←∅, e←e⁻ and e←e⁺.
 */
class AugmentedSheaf {
 public:
  AugmentedSheaf(WeightedGraph graph, AbelianGroup empty, std::vector<AbelianGroup> vertex,
                 std::vector<AbelianGroup> edge, std::vector<Homomorphism> vertex_from_empty,
                 std::vector<Homomorphism> edge_from_empty, std::vector<Homomorphism> edge_from_minus,
                 std::vector<Homomorphism> edge_from_plus);

  const WeightedGraph& graph() const { return graph_; }
  const AbelianGroup& empty_group() const { return empty_; }
  const AbelianGroup& vertex_group(int v) const { return vertex_[static_cast<std::size_t>(v)]; }
  const AbelianGroup& edge_group(int e) const { return edge_[static_cast<std::size_t>(e)]; }
  // res_{v←∅}
  const Homomorphism& res_vertex(int v) const { return vertex_from_empty_[static_cast<std::size_t>(v)]; }
  // res_{e←∅}
  const Homomorphism& res_edge_empty(int e) const { return edge_from_empty_[static_cast<std::size_t>(e)]; }
  // res_{e←e⁻} and res_{e←e⁺}
  const Homomorphism& res_minus(int e) const { return edge_from_minus_[static_cast<std::size_t>(e)]; }
  const Homomorphism& res_plus(int e) const { return edge_from_plus_[static_cast<std::size_t>(e)]; }
  // res_{e←v} for an endpoint v of e.
  const Homomorphism& res_edge(int e, int v) const;

  // False when 𝓕(∅) = 0.
  bool is_augmented() const { return empty_.order() != 1; }
  // The same sheaf with 𝓕(∅) replaced by 0.
  AugmentedSheaf deaugmented() const;

 private:
  WeightedGraph graph_;
  AbelianGroup empty_;
  std::vector<AbelianGroup> vertex_, edge_;
  std::vector<Homomorphism> vertex_from_empty_, edge_from_empty_, edge_from_minus_, edge_from_plus_;
};

struct CompositionViolation {
  int edge = 0;
  int vertex = 0;
};

// Incident pairs (e, v) with res_{e←v} ∘ res_{v←∅} ≠ res_{e←∅}.
std::vector<CompositionViolation> composition_violations(const AugmentedSheaf& f);

/** Subgroups R_x of an ambient R for every vertex and edge, by generators. */
struct SubgroupAssignment {
  AbelianGroup ambient;
  std::vector<std::vector<Element>> vertex;
  std::vector<std::vector<Element>> edge;

  // All-zero assignment sized for g.
  static SubgroupAssignment zero(const AbelianGroup& ambient, const WeightedGraph& g);
  // Throws NotSubgroup when a generator is not an element of the ambient group
  // or the lists do not match the graph.
  void validate(const WeightedGraph& g) const;
};

AugmentedSheaf constant_aug_sheaf(const WeightedGraph& g, const AbelianGroup& r);
AugmentedSheaf constant_sheaf(const WeightedGraph& g, const AbelianGroup& r);

/**
 * Locally constant sheaf with value F everywhere off ∅, identity restrictions
 * except res_{e0←v0} = α·id. Throws PreconditionViolated naming the failed
 * hypothesis.
 */
AugmentedSheaf locally_constant_twist(const WeightedGraph& g, const FiniteField& field, int alpha, int e0, int v0);

/**
 * R̄/𝓖 with 𝓖(∅) = 0, 𝓖(v) = R_v and 𝓖(e) = R_u + R_v + R_e. The composition
 * law is re-verified after construction.
 */
AugmentedSheaf quotient_by_subgroups(const WeightedGraph& g, const SubgroupAssignment& assignment);

// A subgraph of the base graph, by vertex and edge indices.
struct Subgraph {
  std::vector<int> vertices;
  std::vector<int> edges;
};

struct ConditionReport {
  bool condition1 = true;
  bool condition2 = true;
  int cycle_bound = 0;           // ⌈2n/3⌉, or the override
  bool hypothesis_weakened = false;  // an override below ⌈2n/3⌉ was used
  std::size_t cycles_checked = 0;
  std::size_t paths_checked = 0;
  std::optional<Subgraph> first_violation1;
  std::optional<std::pair<int, int>> first_violation2;
  bool ok() const { return condition1 && condition2; }
};

/**
 * Condition (1): for every cycle of length <= ⌈2n/3⌉ and every path of
 * length <= 2, the subgroups on its vertices and edges are linearly
 * disjoint. Condition (2): R_u ∩ R_v = 0 for distinct vertices.
 */
ConditionReport check_conditions(const WeightedGraph& g, const SubgroupAssignment& assignment,
                                 std::optional<int> max_cycle_len = std::nullopt,
                                 std::uint64_t cap = kDefaultEnumerationBudget);

// Subgroups on the vertices and edges of a subgraph, vertices first.
std::vector<std::vector<Element>> subgraph_family(const SubgroupAssignment& assignment, const Subgraph& y);

}  // namespace sheafex
