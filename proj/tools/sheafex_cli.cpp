#include "sheafex/acceptance.hpp"
#include "sheafex/buildings.hpp"
#include "sheafex/catalog.hpp"
#include "sheafex/codes.hpp"
#include "sheafex/cohomology.hpp"
#include "sheafex/complex_io.hpp"
#include "sheafex/sheaf_io.hpp"
#include "sheafex/spectral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace sheafex;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::string in;
  std::string out;
  std::string sheaf;
  std::string group;
  std::string mode = "exhaustive";
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultCochainBudget;
  int max_cycle_len = 0;
  double tolerance = 1e-9;
  std::uint64_t trials = 10000;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SHEAFEX_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw UsageError(std::string("SHEAFEX_BUDGET is not a positive integer: ") + env);
  }
  return kDefaultCochainBudget;
}

bool sampled(const Config& c) {
  if (c.mode != "exhaustive" && c.mode != "sampled") throw UsageError("--mode must be exhaustive or sampled");
  return c.mode == "sampled";
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

void emit(const json& j, const std::string& path) { emit(j.dump(2) + "\n", path); }

json rational(const Rational& r) { return to_string(r); }

WeightedGraph load_graph(const std::string& path) {
  if (path.empty()) throw UsageError("--in is required");
  const WeightedComplex x = load_complex(path);
  return WeightedGraph(x.dimension() > 1 ? skeleton(x, 1) : x);
}

// Constant group shorthand: "gf:p:k" or "cyclic:m1,m2,...".
AbelianGroup parse_group(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  try {
    if (parts.size() == 3 && parts[0] == "gf") return AbelianGroup::field(std::stoi(parts[1]), std::stoi(parts[2]));
    if (parts.size() == 2 && parts[0] == "cyclic") {
      std::vector<std::int64_t> moduli;
      std::stringstream ms(parts[1]);
      for (std::string m; std::getline(ms, m, ',');) moduli.push_back(std::stoll(m));
      return AbelianGroup::cyclic(moduli);
    }
  } catch (const std::logic_error&) {
  }
  throw UsageError("--group must look like gf:p:k or cyclic:m1,m2,...");
}

// Quotient sheaf from --sheaf, or the constant augmented sheaf of --group.
SubgroupAssignment load_sheaf_assignment(const Config& c, const WeightedGraph& g) {
  if (!c.sheaf.empty() && !c.group.empty()) throw UsageError("give either --sheaf or --group");
  if (!c.sheaf.empty()) return load_assignment(c.sheaf, g);
  if (!c.group.empty()) return SubgroupAssignment::zero(parse_group(c.group), g);
  throw UsageError("one of --sheaf or --group is required");
}

json cochain_json(const WeightedGraph& g, const Cochain& c) {
  json j = json::object();
  if (c.degree == 0)
    for (int v = 0; v < g.vertex_count(); ++v) j[g.names()[static_cast<std::size_t>(v)]] = c.values[static_cast<std::size_t>(v)];
  else if (c.degree == 1)
    for (int e = 0; e < g.edge_count(); ++e)
      j[g.names()[static_cast<std::size_t>(g.edge(e).u)] + "," + g.names()[static_cast<std::size_t>(g.edge(e).v)]] =
          c.values[static_cast<std::size_t>(e)];
  else
    j[""] = c.values.front();
  return j;
}

json names_json(const WeightedGraph& g, const std::vector<int>& vs) {
  json j = json::array();
  for (int v : vs) j.push_back(g.names()[static_cast<std::size_t>(v)]);
  return j;
}

json inputs_json(const TheoremInputs& in) {
  json j = {{"lambda", in.lambda}, {"mu", in.mu}, {"t", in.t}, {"s", in.s}, {"s_elided", in.s_elided}};
  j["r"] = in.r ? json(*in.r) : json(nullptr);
  return j;
}

json bound_json(const WeightedGraph& g, const SubgroupAssignment& a, std::optional<double>* value) {
  try {
    const bool partite = g.partite() && g.class_count() >= 2;
    const TheoremBound b = theorem_bound(theorem_inputs(g, &a, partite));
    if (value) *value = b.value;
    return {{"value", b.value}, {"inputs", inputs_json(b.inputs)}, {"formula", b.formula}};
  } catch (const Error& e) {
    return {{"value", nullptr}, {"error", e.what()}};
  }
}

json interval_json(const std::optional<Interval>& i) {
  return i ? json::array({i->lo, i->hi}) : json(nullptr);
}

// ---- commands ----

int cmd_gen(const Config& c, const std::string& family, int n, int k) {
  GraphSpec spec;
  CounterRng rng(c.seed);
  if (family == "complete") spec = complete_graph(n);
  else if (family == "cycle") spec = cycle_graph(n);
  else if (family == "path") spec = path_graph(n);
  else if (family == "bipartite") spec = complete_bipartite(n, k);
  else if (family == "petersen") spec = petersen_graph();
  else if (family == "icosahedron") spec = icosahedron_graph();
  else if (family == "regular") spec = random_regular(n, k, rng);
  else throw UsageError("unknown family " + family);
  const WeightedGraph plain = spec.weighted();
  const auto colors = family == "bipartite" ? bipartition(plain) : std::nullopt;
  const WeightedGraph g = colors ? make_graph(spec.n, spec.edges, *colors) : plain;
  emit(complex_to_json(g.complex()), c.out);
  return kExitOk;
}

int cmd_validate(const Config& c) {
  if (c.in.empty()) throw UsageError("--in is required");
  const WeightedComplex x = load_complex(c.in);
  const ValidationReport r = validate_weights(x);
  json v = json::array();
  for (const auto& w : r.violations)
    v.push_back({{"axiom", w.axiom}, {"face", x.shell().key(w.face)}, {"level", w.level}, {"detail", w.detail}});
  emit(json{{"ok", r.ok()}, {"violations", v}, {"dimension", x.dimension()}, {"vertices", x.vertex_count()}, {"seed", c.seed}},
       c.out);
  return r.ok() ? kExitOk : kExitFalsified;
}

json cheeger_json(const WeightedGraph& g, const CheegerResult& ch) {
  return {{"h", rational(ch.h)},
          {"h_prime", rational(ch.h_prime)},
          {"witness", names_json(g, ch.witness_h)},
          {"witness_h_prime", names_json(g, ch.witness_h_prime)},
          {"exact", ch.exact}};
}

std::optional<CheegerResult> cheeger_for(const Config& c, const WeightedGraph& g) {
  if (sampled(c)) return cheeger(g, SampleOptions{c.seed, c.trials});
  if (g.vertex_count() > 22) return std::nullopt;
  return cheeger(g);
}

int cmd_spectral(const Config& c) {
  const WeightedGraph g = load_graph(c.in);
  const SpectrumReport s = spectrum(g, c.tolerance);
  json j = {{"eigenvalues", s.eigenvalues},
            {"lambda", s.lambda},
            {"interval_circ", interval_json(s.interval_circ)},
            {"interval_diamond", interval_json(s.interval_diamond)},
            {"seed", c.seed}};
  if (const auto ch = cheeger_for(c, g)) {
    const json cj = cheeger_json(g, *ch);
    for (const auto& key : {"h", "h_prime", "witness", "exact"}) j[key] = cj[key];
  } else {
    j["h"] = j["h_prime"] = j["witness"] = nullptr;
    j["note"] = "Cheeger constants need --mode sampled above 22 vertices";
  }
  emit(j, c.out);
  return kExitOk;
}

int cmd_cheeger(const Config& c) {
  const WeightedGraph g = load_graph(c.in);
  const auto ch = cheeger_for(c, g);
  if (!ch) throw BudgetExceeded("exact Cheeger scan", 22, static_cast<std::uint64_t>(g.vertex_count()));
  json j = cheeger_json(g, *ch);
  j["seed"] = c.seed;
  bool ok = true;
  if (ch->exact) {
    const CheegerInequalityReport r = check_cheeger_inequality(g);
    ok = r.holds(c.tolerance);
    j["lambda_max"] = r.lambda_max;
    j["theorem_margin"] = r.theorem_margin;
    j["converse_bound"] = r.converse_bound;
    j["converse_margin"] = r.converse_margin;
    j["holds"] = ok;
  }
  emit(j, c.out);
  return ok ? kExitOk : kExitFalsified;
}

json mixing_json(const WeightedGraph& g, const MixingReport& r) {
  json j = {{"pairs", r.pairs},
            {"identity_failures", r.identity_failures},
            {"violations", r.violations},
            {"worst_slack_i", r.worst_slack_i},
            {"worst_slack_ii", r.worst_slack_ii},
            {"mu", r.mu},
            {"lambda", r.lambda},
            {"ok", r.ok()}};
  if (r.first_violation) j["first_violation"] = {names_json(g, r.first_violation->first), names_json(g, r.first_violation->second)};
  return j;
}

int cmd_eml(const Config& c) {
  const WeightedGraph g = load_graph(c.in);
  MixingOptions opt;
  opt.exhaustive = !sampled(c);
  opt.seed = c.seed;
  opt.trials = c.trials;
  opt.tolerance = c.tolerance;
  const MixingReport r = eml_check(g, opt);
  json j = {{"mode", c.mode}, {"seed", c.seed}, {"mixing", mixing_json(g, r)}};
  bool ok = r.ok();
  if (g.partite() && g.class_count() >= 2) {
    const MixingReport p = partite_eml_check(g, opt);
    j["partite_mixing"] = mixing_json(g, p);
    ok = ok && p.ok();
  } else {
    j["partite_mixing"] = nullptr;
  }
  emit(j, c.out);
  return ok ? kExitOk : kExitFalsified;
}

json conditions_json(const WeightedGraph& g, const ConditionReport& r) {
  json j = {{"condition1", r.condition1},
            {"condition2", r.condition2},
            {"cycle_bound", r.cycle_bound},
            {"hypothesis_weakened", r.hypothesis_weakened},
            {"cycles_checked", r.cycles_checked},
            {"paths_checked", r.paths_checked},
            {"ok", r.ok()}};
  if (r.first_violation1) {
    json edges = json::array();
    for (int e : r.first_violation1->edges)
      edges.push_back(g.names()[static_cast<std::size_t>(g.edge(e).u)] + "," + g.names()[static_cast<std::size_t>(g.edge(e).v)]);
    j["first_violation1"] = {{"vertices", names_json(g, r.first_violation1->vertices)}, {"edges", edges}};
  }
  if (r.first_violation2) j["first_violation2"] = names_json(g, {r.first_violation2->first, r.first_violation2->second});
  return j;
}

std::optional<int> cycle_override(const Config& c) {
  return c.max_cycle_len > 0 ? std::optional<int>(c.max_cycle_len) : std::nullopt;
}

int cmd_sheaf(const Config& c) {
  const WeightedGraph g = load_graph(c.in);
  const SubgroupAssignment a = load_sheaf_assignment(c, g);
  const AugmentedSheaf f = quotient_by_subgroups(g, a);
  const ConditionReport cond = check_conditions(g, a, cycle_override(c));
  const CohomologySummary h = cohomology_spaces(f, c.budget);
  const auto comp = composition_violations(f);
  const bool ok = h.d0_after_dminus1_zero && comp.empty();
  emit(json{{"ambient", ambient_to_json(a.ambient)},
            {"conditions", conditions_json(g, cond)},
            {"cohomology",
             {{"b0_order", to_string(h.b0_order)},
              {"z0_order", to_string(h.z0_order)},
              {"h0_order", to_string(h.h0_order)},
              {"d0_after_dminus1_zero", h.d0_after_dminus1_zero},
              {"d0_after_dminus1_checked", h.d0_after_dminus1_checked}}},
            {"composition_violations", comp.size()},
            {"seed", c.seed}},
       c.out);
  return ok ? kExitOk : kExitFalsified;
}

bool line_forest_applies(const WeightedGraph& g, const SubgroupAssignment& a) {
  if (g.vertex_count() < 2 || g.vertex_count() > 13) return false;
  for (const auto& e : a.edge)
    if (a.ambient.subgroup_order(e) != 1) return false;
  for (const auto& v : a.vertex)
    if (a.ambient.subgroup_order(v) > 2) return false;
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.vertex_weight(v) != g.vertex_weight(0)) return false;
  return check_linear_disjoint(a.ambient, a.vertex).disjoint;
}

int cmd_cb0(const Config& c) {
  const WeightedGraph g = load_graph(c.in);
  const SubgroupAssignment a = load_sheaf_assignment(c, g);
  const AugmentedSheaf f = quotient_by_subgroups(g, a);
  const bool sample = sampled(c);
  json j = {{"mode", c.mode}, {"seed", c.seed}};
  std::optional<Rational> exact;
  try {
    const ExpansionResult r = cb0(f, sample ? std::optional<SampleSpec>(SampleSpec{c.seed, c.trials}) : std::nullopt, c.budget);
    j["method"] = sample ? "sampled" : "exhaustive";
    j["upper_bound_only"] = !r.exhaustive;
    j["evaluated"] = r.evaluated;
    if (r.unconstrained) {
      j["cb0"] = "inf";
      j["witness"] = nullptr;
    } else {
      j["cb0"] = r.exhaustive ? json(to_string(r.value)) : json(to_double(r.value));
      j["witness"] = {{"cochain", cochain_json(g, *r.witness)},
                      {"nearest_coboundary", cochain_json(g, *r.nearest)},
                      {"coboundary_norm", rational(r.coboundary_norm)},
                      {"distance", rational(r.distance)}};
      if (r.exhaustive) exact = r.value;
    }
  } catch (const BudgetExceeded&) {
    if (sample || !line_forest_applies(g, a)) throw;
    const LineForestResult lf = line_forest_min_ratio(g, a, c.budget);
    j["method"] = "line_forest";
    j["upper_bound_only"] = !lf.certified;
    j["cb0"] = to_string(lf.value);
    j["witness"] = {{"cochain", cochain_json(g, lf.witness)},
                    {"coboundary_norm", rational(lf.coboundary_norm)},
                    {"distance", rational(lf.distance)},
                    {"certified", lf.certified}};
    if (lf.certified) exact = lf.value;
  }
  std::optional<double> bound;
  j["theorem_bound"] = bound_json(g, a, &bound);
  const ConditionReport cond = check_conditions(g, a, cycle_override(c));
  j["conditions"] = conditions_json(g, cond);
  bool ok = true;
  if (exact && bound && *bound > 0 && cond.ok() && !cond.hypothesis_weakened) ok = to_double(*exact) >= *bound;
  // Constant sheaf: h′ ≤ cb₀ ≤ h.
  bool constant = true;
  for (const auto& v : a.vertex) constant = constant && a.ambient.subgroup_order(v) == 1;
  for (const auto& e : a.edge) constant = constant && a.ambient.subgroup_order(e) == 1;
  if (constant && exact && g.vertex_count() <= 22) {
    const CheegerResult ch = cheeger(g);
    const bool sandwich = ch.h_prime <= *exact && *exact <= ch.h;
    j["cheeger"] = {{"h", rational(ch.h)}, {"h_prime", rational(ch.h_prime)}, {"sandwich_holds", sandwich}};
    ok = ok && sandwich;
  }
  j["consistent"] = ok;
  emit(j, c.out);
  return ok ? kExitOk : kExitFalsified;
}

int cmd_cosys(const Config& c, double epsilon, double delta, bool augmented) {
  const WeightedGraph g = load_graph(c.in);
  const SubgroupAssignment a = load_sheaf_assignment(c, g);
  const AugmentedSheaf full = quotient_by_subgroups(g, a);
  const AugmentedSheaf f = augmented ? full : full.deaugmented();
  const bool sample = sampled(c);
  const CosystolicReport r =
      cosystolic_check(f, epsilon, delta, sample ? std::optional<SampleSpec>(SampleSpec{c.seed, c.trials}) : std::nullopt, c.budget);
  json j = {{"mode", c.mode},
            {"seed", c.seed},
            {"view", augmented ? "augmented" : "plain"},
            {"epsilon", epsilon},
            {"delta", delta},
            {"exhaustive", r.exhaustive},
            {"epsilon_max", r.epsilon_unconstrained ? json("inf") : json(to_string(r.epsilon_max))},
            {"delta_max", to_string(r.delta_max)},
            {"delta_vacuous", r.delta_vacuous},
            {"c1_holds", r.c1_holds},
            {"c2_holds", r.c2_holds},
            {"holds", r.holds()}};
  j["c1_witness"] = r.c1_witness ? cochain_json(g, *r.c1_witness) : json(nullptr);
  j["c2_witness"] = r.c2_witness ? cochain_json(g, *r.c2_witness) : json(nullptr);
  emit(j, c.out);
  return r.holds() ? kExitOk : kExitFalsified;
}

int cmd_building(const Config& c, const std::string& type, int n, int q, const std::string& table) {
  if (!table.empty()) {
    if (table != "example77") throw UsageError("--table accepts only example77");
    emit(table77_csv(), c.out);
    return kExitOk;
  }
  if (type != "A") throw UsageError("--type must be A");
  if (n < 1 || q < 2) throw UsageError("--n >= 1 and --q >= 2 are required");
  const WeightedComplex x = build_An(q, n, c.budget);
  if (!c.out.empty()) save_complex(x, c.out);
  const int thick = thickness(x);
  const int r = n - 1;
  json j = {{"type", "A" + std::to_string(n)},
            {"field_order", q},
            {"thickness", thick},
            {"dimension", x.dimension()},
            {"vertices", x.vertex_count()},
            {"top_faces", x.faces(x.dimension()).size()},
            {"weights_valid", validate_weights(x).ok()},
            {"seed", c.seed}};
  if (r >= 1) {
    const Lemma75Report l = check_lemma75(x, thick);
    j["edge_vertex_ratio"] = {{"max_ratio", rational(l.max_ratio)}, {"bound", rational(l.bound)}, {"holds", l.holds()}, {"q_used", "thickness"}};
    try {
      const CorollaryBounds b = corollary_bounds(thick, r, 3);
      j["theorem_lambda_bound"] = {{"value", theorem72_bound(thick, r, 3)}, {"q_used", "thickness"}};
      j["corollary_bounds"] = {{"cor74", b.cor74}, {"cor76", b.cor76}, {"cor76_refined", b.cor76_refined}, {"q_used", "thickness"}};
    } catch (const Error& e) {
      j["theorem_lambda_bound"] = {{"value", nullptr}, {"error", e.what()}};
    }
    const WeightedGraph g(x.dimension() > 1 ? skeleton(x, 1) : x);
    if (g.vertex_count() <= 400) {
      const SpectrumReport s = spectrum(g);
      j["lambda"] = s.lambda;
      j["interval_diamond"] = interval_json(s.interval_diamond);
    }
    if (!c.out.empty()) j["complex_file"] = c.out;
    std::cout << j.dump(2) << "\n";
    return l.holds() ? kExitOk : kExitFalsified;
  }
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_ltc(const Config& c, const std::string& graph, int m, const std::string& report) {
  const WeightedGraph g = load_graph(graph);
  const IntroLtc ltc = intro_ltc(g, m);
  const SheafCode code = z0_code(ltc.sheaf, std::nullopt, std::nullopt, c.budget);
  const bool sample = sampled(c);
  json j = {{"mode", c.mode}, {"seed", c.seed}, {"m", m}, {"n", g.vertex_count()}};
  j["codewords"] = to_string(code.size);
  j["alphabet"] = code.alphabet.describe();
  j["distance"] = to_string(code_distance(code));
  bool ok = true;
  try {
    const TesterReport t =
        tester_metrics(code, sample ? std::optional<SampleSpec>(SampleSpec{c.seed, c.trials}) : std::nullopt, false, c.budget);
    j["rate"] = t.rate;
    j["rate_exact"] = t.rate_exact ? json(to_string(*t.rate_exact)) : json(nullptr);
    j["method"] = sample ? "sampled" : "exhaustive";
    if (t.soundness_unconstrained) j["soundness"] = "inf";
    else if (t.exhaustive) j["soundness"] = to_string(t.soundness);
    else j["soundness"] = {{"upper_bound", to_double(t.soundness)}};
    j["evaluated"] = t.evaluated;
    if (t.exhaustive && !t.soundness_unconstrained) ok = to_double(t.soundness) >= ltc.claim.value;
  } catch (const BudgetExceeded&) {
    if (sample) throw;
    const LineForestResult lf = line_forest_min_ratio(g, ltc.assignment, c.budget);
    const CodeRate rate = code_rate(code);
    j["rate"] = rate.value;
    j["rate_exact"] = rate.exact ? json(to_string(*rate.exact)) : json(nullptr);
    j["method"] = "line_forest";
    j["soundness"] = lf.certified ? json(to_string(lf.value)) : json({{"upper_bound", to_double(lf.value)}});
    j["certified"] = lf.certified;
    if (lf.certified) ok = to_double(lf.value) >= ltc.claim.value;
  }
  j["theorem_claim"] = {{"value", ltc.claim.value}, {"formula", ltc.claim.formula}, {"inputs", inputs_json(ltc.claim.inputs)}};
  j["consistent"] = ok;
  emit(j, report.empty() ? c.out : report);
  return ok ? kExitOk : kExitFalsified;
}

int cmd_suite(const Config& c, const std::vector<int>& only) {
  SuiteOptions options;
  options.seed = c.seed;
  options.only = only;
  for (int id : only)
    if (id < 1 || id > kCriterionCount) throw UsageError("--only takes criterion numbers 1.." + std::to_string(kCriterionCount));
  int failed = 0;
  std::cout << "seed " << c.seed << "\n";
  run_suite(options, [&](const CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    failed += !r.passed();
  });
  std::cout << (failed ? std::to_string(failed) + " failed" : std::string("all passed")) << "\n";
  return failed ? kExitFalsified : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted complexes, sheaves on graphs and their expansion"};
  app.require_subcommand(1);
  Config c;
  try {
    c.budget = default_budget();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto common = [&](CLI::App* s, bool input, bool sampling) {
    if (input) s->add_option("--in", c.in, "Complex file (JSON)");
    s->add_option("--out", c.out, "Output path (default stdout)");
    s->add_option("--seed", c.seed, "Seed for all randomness");
    s->add_option("--budget", c.budget, "Enumeration budget (default SHEAFEX_BUDGET or 2^20)");
    s->add_option("--tolerance", c.tolerance, "Floating-point tolerance");
    if (sampling) {
      s->add_option("--mode", c.mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
      s->add_option("--trials", c.trials, "Samples in sampled mode");
    }
  };

  std::string family = "complete";
  int n = 0, k = 0, q = 0, m = 0;
  auto* gen = app.add_subcommand("gen", "Write a graph from a named family as a complex file");
  common(gen, false, false);
  gen->add_option("--family", family, "complete, cycle, path, bipartite, petersen, icosahedron or regular");
  gen->add_option("--n", n, "Vertices (first side for bipartite)");
  gen->add_option("--k", k, "Degree for regular, second side for bipartite");

  auto* validate = app.add_subcommand("validate", "Check the weight axioms of a complex");
  common(validate, true, false);
  auto* spectral = app.add_subcommand("spectral", "Spectrum of the weighted adjacency operator");
  common(spectral, true, true);
  auto* cheeger_cmd = app.add_subcommand("cheeger", "Cheeger constants and the spectral inequalities");
  common(cheeger_cmd, true, true);
  auto* eml = app.add_subcommand("eml", "Mixing lemmas over subset pairs");
  common(eml, true, true);

  auto* sheaf = app.add_subcommand("sheaf", "Disjointness conditions and cohomology of a quotient sheaf");
  common(sheaf, true, false);
  for (auto* s : {sheaf}) {
    s->add_option("--sheaf", c.sheaf, "Sheaf spec file (JSON)");
    s->add_option("--group", c.group, "Constant group gf:p:k or cyclic:m1,...");
    s->add_option("--max-cycle-len", c.max_cycle_len, "Override the cycle bound (weakens the hypothesis)");
  }
  auto* cb0_cmd = app.add_subcommand("cb0", "Coboundary expansion in dimension 0");
  common(cb0_cmd, true, true);
  cb0_cmd->add_option("--sheaf", c.sheaf, "Sheaf spec file (JSON)");
  cb0_cmd->add_option("--group", c.group, "Constant group gf:p:k or cyclic:m1,...");
  cb0_cmd->add_option("--max-cycle-len", c.max_cycle_len, "Override the cycle bound (weakens the hypothesis)");

  double epsilon = 0.0, delta = 0.0;
  bool augmented = false;
  auto* cosys = app.add_subcommand("cosys", "Cosystolic expansion check for given (epsilon, delta)");
  common(cosys, true, true);
  cosys->add_option("--sheaf", c.sheaf, "Sheaf spec file (JSON)");
  cosys->add_option("--group", c.group, "Constant group gf:p:k or cyclic:m1,...");
  cosys->add_option("--epsilon", epsilon, "Claimed epsilon")->required();
  cosys->add_option("--delta", delta, "Claimed delta")->required();
  cosys->add_flag("--augmented", augmented, "Keep the group on the empty face");

  std::string type = "A", table;
  auto* building = app.add_subcommand("building", "Spherical building A_n(F_q) or the threshold table");
  common(building, false, false);
  building->add_option("--type", type, "Building type (A)");
  building->add_option("--n", n, "Rank n of A_n");
  building->add_option("--q", q, "Field order");
  building->add_option("--table", table, "example77 prints the threshold table as CSV");

  std::string graph, report;
  auto* ltc = app.add_subcommand("ltc", "Code from basis-line subgroups on a regular graph");
  common(ltc, false, true);
  ltc->add_option("--graph", graph, "Regular graph (complex file)")->required();
  ltc->add_option("--m", m, "Number of basis lines")->required();
  ltc->add_option("--report", report, "Report path (default --out or stdout)");

  auto* t77 = app.add_subcommand("table77", "Threshold table as CSV");
  common(t77, false, false);

  bool quick = false;
  std::vector<int> only;
  auto* suite = app.add_subcommand("suite", "Run the acceptance battery");
  suite->add_option("--seed", c.seed, "Seed for all randomness");
  suite->add_flag("--quick", quick, "Accepted for scripts; the full battery already finishes in under a minute");
  suite->add_option("--only", only, "Criterion numbers to run")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(c, family, n, k);
    if (*validate) return cmd_validate(c);
    if (*spectral) return cmd_spectral(c);
    if (*cheeger_cmd) return cmd_cheeger(c);
    if (*eml) return cmd_eml(c);
    if (*sheaf) return cmd_sheaf(c);
    if (*cb0_cmd) return cmd_cb0(c);
    if (*cosys) return cmd_cosys(c, epsilon, delta, augmented);
    if (*building) return cmd_building(c, type, n, q, table);
    if (*ltc) return cmd_ltc(c, graph, m, report);
    if (*t77) {
      emit(table77_csv(), c.out);
      return kExitOk;
    }
    if (*suite) return cmd_suite(c, only);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
