#include "sheafex/complex_io.hpp"

#include "sheafex/error.hpp"

#include <fstream>
#include <sstream>

namespace sheafex {

using nlohmann::json;

WeightedComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("top_faces"))
    throw Error(ErrorKind::InvalidInput, "complex file needs a \"top_faces\" array");
  std::vector<std::vector<std::string>> tops;
  for (const auto& f : j.at("top_faces")) {
    std::vector<std::string> face;
    for (const auto& v : f) face.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    tops.push_back(std::move(face));
  }
  Complex shell = Complex::build(tops);
  if (j.contains("dimension") && j.at("dimension").get<int>() != shell.dimension())
    throw Error(ErrorKind::MixedDimension, "declared dimension " + j.at("dimension").dump() +
                                               " disagrees with top faces of dimension " +
                                               std::to_string(shell.dimension()));

  std::optional<std::vector<int>> partite;
  if (j.contains("partite")) {
    std::vector<int> labels(shell.vertex_count(), -1);
    for (const auto& [name, cls] : j.at("partite").items()) {
      const int v = shell.vertex_index(name);
      if (v < 0) throw Error(ErrorKind::InvalidInput, "partite label for unknown vertex '" + name + "'");
      labels[static_cast<std::size_t>(v)] = cls.get<int>();
    }
    for (int c : labels)
      if (c < 0) throw Error(ErrorKind::InvalidInput, "partite labeling misses a vertex");
    partite = std::move(labels);
  }

  if (!j.contains("weights")) return canonical_weights(shell, std::move(partite));

  const int d = shell.dimension();
  std::vector<std::vector<std::optional<Rational>>> given(static_cast<std::size_t>(d + 2));
  for (int i = -1; i <= d; ++i) given[static_cast<std::size_t>(i + 1)].resize(shell.face_count(i));
  for (const auto& [key, value] : j.at("weights").items()) {
    const Face face = shell.parse_key(key);
    const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    given[face.size()][*shell.find(face)] = parse_rational(text);
  }
  std::vector<Rational> top;
  for (std::size_t i = 0; i < shell.face_count(d); ++i) {
    const auto& w = given[static_cast<std::size_t>(d + 1)][i];
    if (!w) throw Error(ErrorKind::InvalidInput, "missing weight for top face " + shell.key(shell.faces(d)[i]));
    top.push_back(*w);
  }
  WeightedComplex derived = weights_from_top(shell, top, partite);
  std::vector<std::vector<Rational>> w;
  for (int i = -1; i <= d; ++i) {
    std::vector<Rational> level = derived.weights(i);
    for (std::size_t k = 0; k < level.size(); ++k)
      if (const auto& g = given[static_cast<std::size_t>(i + 1)][k]) level[k] = *g;
    w.push_back(std::move(level));
  }
  return WeightedComplex(shell, std::move(w), std::move(partite));
}

json complex_to_json(const WeightedComplex& x) {
  const Complex& c = x.shell();
  json j;
  j["dimension"] = c.dimension();
  json tops = json::array();
  for (const auto& f : c.faces(c.dimension())) {
    json face = json::array();
    for (int v : f) face.push_back(c.vertex_names()[static_cast<std::size_t>(v)]);
    tops.push_back(face);
  }
  j["top_faces"] = tops;
  json weights = json::object();
  for (int i = -1; i <= c.dimension(); ++i)
    for (std::size_t k = 0; k < c.face_count(i); ++k) weights[c.key(c.faces(i)[k])] = to_string(x.weight(i, k));
  j["weights"] = weights;
  if (const auto& p = x.partite()) {
    json part = json::object();
    for (std::size_t v = 0; v < p->size(); ++v) part[c.vertex_names()[v]] = (*p)[v];
    j["partite"] = part;
  }
  return j;
}

WeightedComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, "'" + path + "': " + e.what());
  }
  return complex_from_json(j);
}

void save_complex(const WeightedComplex& x, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  out << complex_to_json(x).dump(2) << '\n';
}

}  // namespace sheafex
