#include "sheafex/sheaf_io.hpp"

#include "sheafex/error.hpp"

#include <fstream>

namespace sheafex {

using nlohmann::json;

AbelianGroup ambient_from_json(const json& j) {
  const std::string backend = j.value("backend", "");
  if (backend == "gf") return AbelianGroup::field(j.at("p").get<int>(), j.at("k").get<int>());
  if (backend == "cyclic") return AbelianGroup::cyclic(j.at("moduli").get<std::vector<std::int64_t>>());
  throw Error(ErrorKind::InvalidInput, "ambient backend must be \"gf\" or \"cyclic\"");
}

json ambient_to_json(const AbelianGroup& r) {
  if (r.prime()) return json{{"backend", "gf"}, {"p", *r.prime()}, {"k", r.rank()}};
  return json{{"backend", "cyclic"}, {"moduli", r.moduli()}};
}

SubgroupAssignment assignment_from_json(const json& j, const WeightedGraph& g) {
  if (!j.is_object() || !j.contains("ambient")) throw Error(ErrorKind::InvalidInput, "sheaf spec needs \"ambient\"");
  SubgroupAssignment a = SubgroupAssignment::zero(ambient_from_json(j.at("ambient")), g);
  if (j.contains("subgroups")) {
    const Complex& shell = g.complex().shell();
    for (const auto& [key, gens] : j.at("subgroups").items()) {
      const Face face = shell.parse_key(key);
      std::vector<Element> list;
      for (const auto& x : gens) list.push_back(x.get<Element>());
      if (face.size() == 1) {
        a.vertex[static_cast<std::size_t>(face[0])] = std::move(list);
      } else if (face.size() == 2) {
        a.edge[static_cast<std::size_t>(g.edge_between(face[0], face[1]))] = std::move(list);
      } else {
        throw Error(ErrorKind::InvalidInput, "subgroups live on vertices and edges, not on '" + key + "'");
      }
    }
  }
  a.validate(g);
  return a;
}

json assignment_to_json(const SubgroupAssignment& a, const WeightedGraph& g) {
  json subgroups = json::object();
  const Complex& shell = g.complex().shell();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!a.vertex[static_cast<std::size_t>(v)].empty()) subgroups[shell.key({v})] = a.vertex[static_cast<std::size_t>(v)];
  for (int e = 0; e < g.edge_count(); ++e)
    if (!a.edge[static_cast<std::size_t>(e)].empty())
      subgroups[shell.key({g.edge(e).u, g.edge(e).v})] = a.edge[static_cast<std::size_t>(e)];
  return json{{"ambient", ambient_to_json(a.ambient)}, {"subgroups", subgroups}};
}

SubgroupAssignment load_assignment(const std::string& path, const WeightedGraph& g) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
  return assignment_from_json(j, g);
}

}  // namespace sheafex
