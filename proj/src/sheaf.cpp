#include "sheafex/sheaf.hpp"

#include "sheafex/error.hpp"

namespace sheafex {

AugmentedSheaf::AugmentedSheaf(WeightedGraph graph, AbelianGroup empty, std::vector<AbelianGroup> vertex,
                               std::vector<AbelianGroup> edge, std::vector<Homomorphism> vertex_from_empty,
                               std::vector<Homomorphism> edge_from_empty, std::vector<Homomorphism> edge_from_minus,
                               std::vector<Homomorphism> edge_from_plus)
    : graph_(std::move(graph)),
      empty_(std::move(empty)),
      vertex_(std::move(vertex)),
      edge_(std::move(edge)),
      vertex_from_empty_(std::move(vertex_from_empty)),
      edge_from_empty_(std::move(edge_from_empty)),
      edge_from_minus_(std::move(edge_from_minus)),
      edge_from_plus_(std::move(edge_from_plus)) {
  const auto n = static_cast<std::size_t>(graph_.vertex_count());
  const auto m = static_cast<std::size_t>(graph_.edge_count());
  if (vertex_.size() != n || vertex_from_empty_.size() != n || edge_.size() != m || edge_from_empty_.size() != m ||
      edge_from_minus_.size() != m || edge_from_plus_.size() != m)
    throw Error(ErrorKind::TypeMismatch, "sheaf data does not match the graph");
  for (std::size_t v = 0; v < n; ++v)
    if (!(vertex_from_empty_[v].source() == empty_) || !(vertex_from_empty_[v].target() == vertex_[v]))
      throw Error(ErrorKind::TypeMismatch, "res_{v<-0} has wrong source or target at vertex " + std::to_string(v));
  for (std::size_t e = 0; e < m; ++e) {
    const Edge& ed = graph_.edge(static_cast<int>(e));
    if (!(edge_from_empty_[e].source() == empty_) || !(edge_from_empty_[e].target() == edge_[e]) ||
        !(edge_from_minus_[e].source() == vertex_[static_cast<std::size_t>(ed.u)]) ||
        !(edge_from_minus_[e].target() == edge_[e]) ||
        !(edge_from_plus_[e].source() == vertex_[static_cast<std::size_t>(ed.v)]) ||
        !(edge_from_plus_[e].target() == edge_[e]))
      throw Error(ErrorKind::TypeMismatch, "restriction at edge " + std::to_string(e) + " has wrong source or target");
  }
}

const Homomorphism& AugmentedSheaf::res_edge(int e, int v) const {
  const Edge& ed = graph_.edge(e);
  if (v == ed.u) return res_minus(e);
  if (v == ed.v) return res_plus(e);
  throw Error(ErrorKind::InvalidInput, "vertex is not an endpoint of the edge");
}

AugmentedSheaf AugmentedSheaf::deaugmented() const {
  const AbelianGroup zero;
  std::vector<Homomorphism> ve, ee;
  for (int v = 0; v < graph_.vertex_count(); ++v) ve.push_back(Homomorphism::zero(zero, vertex_group(v)));
  for (int e = 0; e < graph_.edge_count(); ++e) ee.push_back(Homomorphism::zero(zero, edge_group(e)));
  return AugmentedSheaf(graph_, zero, vertex_, edge_, std::move(ve), std::move(ee), edge_from_minus_, edge_from_plus_);
}

std::vector<CompositionViolation> composition_violations(const AugmentedSheaf& f) {
  std::vector<CompositionViolation> out;
  const WeightedGraph& g = f.graph();
  for (int e = 0; e < g.edge_count(); ++e)
    for (int v : {g.edge(e).u, g.edge(e).v})
      if (!f.res_vertex(v).then(f.res_edge(e, v)).same_map(f.res_edge_empty(e))) out.push_back({e, v});
  return out;
}

SubgroupAssignment SubgroupAssignment::zero(const AbelianGroup& ambient, const WeightedGraph& g) {
  return {ambient, std::vector<std::vector<Element>>(static_cast<std::size_t>(g.vertex_count())),
          std::vector<std::vector<Element>>(static_cast<std::size_t>(g.edge_count()))};
}

void SubgroupAssignment::validate(const WeightedGraph& g) const {
  if (vertex.size() != static_cast<std::size_t>(g.vertex_count()) || edge.size() != static_cast<std::size_t>(g.edge_count()))
    throw Error(ErrorKind::NotSubgroup, "subgroup assignment does not match the graph");
  auto check = [&](const std::vector<std::vector<Element>>& lists, const char* what) {
    for (std::size_t i = 0; i < lists.size(); ++i)
      for (const auto& x : lists[i]) {
        bool ok = static_cast<int>(x.size()) == ambient.rank();
        for (std::size_t c = 0; ok && c < x.size(); ++c) ok = x[c] >= 0 && x[c] < ambient.moduli()[c];
        if (!ok) throw Error(ErrorKind::NotSubgroup, std::string("generator at ") + what + " " + std::to_string(i) + " is not an element of R");
      }
  };
  check(vertex, "vertex");
  check(edge, "edge");
}

namespace {

AugmentedSheaf constant_with_empty(const WeightedGraph& g, const AbelianGroup& r, const AbelianGroup& empty) {
  std::vector<AbelianGroup> vg(static_cast<std::size_t>(g.vertex_count()), r);
  std::vector<AbelianGroup> eg(static_cast<std::size_t>(g.edge_count()), r);
  const bool augmented = empty == r;
  std::vector<Homomorphism> ve, ee, em, ep;
  for (int v = 0; v < g.vertex_count(); ++v)
    ve.push_back(augmented ? Homomorphism::identity(r) : Homomorphism::zero(empty, r));
  for (int e = 0; e < g.edge_count(); ++e) {
    ee.push_back(augmented ? Homomorphism::identity(r) : Homomorphism::zero(empty, r));
    em.push_back(Homomorphism::identity(r));
    ep.push_back(Homomorphism::identity(r));
  }
  return AugmentedSheaf(g, empty, std::move(vg), std::move(eg), std::move(ve), std::move(ee), std::move(em), std::move(ep));
}

}  // namespace

AugmentedSheaf constant_aug_sheaf(const WeightedGraph& g, const AbelianGroup& r) { return constant_with_empty(g, r, r); }

AugmentedSheaf constant_sheaf(const WeightedGraph& g, const AbelianGroup& r) {
  return constant_with_empty(g, r, AbelianGroup());
}

AugmentedSheaf locally_constant_twist(const WeightedGraph& g, const FiniteField& field, int alpha, int e0, int v0) {
  if (field.order() <= 2) throw Error(ErrorKind::PreconditionViolated, "field must have more than 2 elements");
  if (alpha <= 1 || alpha >= field.order()) throw Error(ErrorKind::PreconditionViolated, "alpha must lie in F - {0, 1}");
  if (e0 < 0 || e0 >= g.edge_count()) throw Error(ErrorKind::PreconditionViolated, "e0 is not an edge");
  if (g.edge(e0).u != v0 && g.edge(e0).v != v0) throw Error(ErrorKind::PreconditionViolated, "v0 is not a vertex of e0");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) < 2)
      throw Error(ErrorKind::PreconditionViolated, "vertex " + g.names()[static_cast<std::size_t>(v)] + " lies in fewer than 2 edges");
  if (!is_connected(g)) throw Error(ErrorKind::PreconditionViolated, "graph is not connected");

  const AbelianGroup a = field.additive_group();
  AugmentedSheaf base = constant_sheaf(g, a);
  std::vector<AbelianGroup> vg(static_cast<std::size_t>(g.vertex_count()), a);
  std::vector<AbelianGroup> eg(static_cast<std::size_t>(g.edge_count()), a);
  std::vector<Homomorphism> ve, ee, em, ep;
  for (int v = 0; v < g.vertex_count(); ++v) ve.push_back(base.res_vertex(v));
  const Homomorphism twist(a, a, field.multiplication_matrix(alpha));
  for (int e = 0; e < g.edge_count(); ++e) {
    ee.push_back(base.res_edge_empty(e));
    em.push_back(e == e0 && g.edge(e).u == v0 ? twist : Homomorphism::identity(a));
    ep.push_back(e == e0 && g.edge(e).v == v0 ? twist : Homomorphism::identity(a));
  }
  return AugmentedSheaf(g, AbelianGroup(), std::move(vg), std::move(eg), std::move(ve), std::move(ee), std::move(em),
                        std::move(ep));
}

AugmentedSheaf quotient_by_subgroups(const WeightedGraph& g, const SubgroupAssignment& assignment) {
  assignment.validate(g);
  const AbelianGroup& r = assignment.ambient;
  std::vector<AbelianGroup> vg, eg;
  for (int v = 0; v < g.vertex_count(); ++v) vg.push_back(r.quotient(assignment.vertex[static_cast<std::size_t>(v)]));
  for (int e = 0; e < g.edge_count(); ++e) {
    std::vector<Element> gens = assignment.vertex[static_cast<std::size_t>(g.edge(e).u)];
    const auto& gv = assignment.vertex[static_cast<std::size_t>(g.edge(e).v)];
    const auto& ge = assignment.edge[static_cast<std::size_t>(e)];
    gens.insert(gens.end(), gv.begin(), gv.end());
    gens.insert(gens.end(), ge.begin(), ge.end());
    eg.push_back(r.quotient(gens));
  }
  std::vector<Homomorphism> ve, ee, em, ep;
  for (int v = 0; v < g.vertex_count(); ++v) ve.push_back(Homomorphism::projection(r, vg[static_cast<std::size_t>(v)]));
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& target = eg[static_cast<std::size_t>(e)];
    ee.push_back(Homomorphism::projection(r, target));
    em.push_back(Homomorphism::projection(vg[static_cast<std::size_t>(g.edge(e).u)], target));
    ep.push_back(Homomorphism::projection(vg[static_cast<std::size_t>(g.edge(e).v)], target));
  }
  AugmentedSheaf out(g, r, std::move(vg), std::move(eg), std::move(ve), std::move(ee), std::move(em), std::move(ep));
  if (!composition_violations(out).empty())
    throw Error(ErrorKind::NotSubgroup, "quotient restrictions violate the composition law");
  return out;
}

std::vector<std::vector<Element>> subgraph_family(const SubgroupAssignment& assignment, const Subgraph& y) {
  std::vector<std::vector<Element>> fam;
  for (int v : y.vertices) fam.push_back(assignment.vertex[static_cast<std::size_t>(v)]);
  for (int e : y.edges) fam.push_back(assignment.edge[static_cast<std::size_t>(e)]);
  return fam;
}

ConditionReport check_conditions(const WeightedGraph& g, const SubgroupAssignment& assignment,
                                 std::optional<int> max_cycle_len, std::uint64_t cap) {
  assignment.validate(g);
  ConditionReport rep;
  const int n = g.vertex_count();
  const int literal = (2 * n + 2) / 3;
  rep.cycle_bound = max_cycle_len.value_or(literal);
  rep.hypothesis_weakened = rep.cycle_bound < literal;

  auto disjoint = [&](const Subgraph& y) {
    return check_linear_disjoint(assignment.ambient, subgraph_family(assignment, y)).disjoint;
  };
  for (const auto& c : enumerate_cycles(g, rep.cycle_bound, cap)) {
    ++rep.cycles_checked;
    Subgraph y{c.vertices, c.edges};
    if (!disjoint(y)) {
      rep.condition1 = false;
      rep.first_violation1 = std::move(y);
      break;
    }
  }
  if (rep.condition1)
    for (const auto& p : enumerate_short_paths(g, 2, cap)) {
      ++rep.paths_checked;
      Subgraph y{p.vertices, p.edges};
      if (!disjoint(y)) {
        rep.condition1 = false;
        rep.first_violation1 = std::move(y);
        break;
      }
    }
  for (int u = 0; u < n && rep.condition2; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!check_linear_disjoint(assignment.ambient,
                                 {assignment.vertex[static_cast<std::size_t>(u)], assignment.vertex[static_cast<std::size_t>(v)]})
               .disjoint) {
        rep.condition2 = false;
        rep.first_violation2 = std::make_pair(u, v);
        break;
      }
  return rep;
}

}  // namespace sheafex
