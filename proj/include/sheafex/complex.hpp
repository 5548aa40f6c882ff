#pragma once

#include "sheafex/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sheafex {

// Sorted dense vertex indices; the empty face has dimension -1.
using Face = std::vector<int>;

inline int face_dimension(const Face& f) { return static_cast<int>(f.size()) - 1; }

/**
 * Finite pure simplicial complex. Vertex names are sorted lexicographically
 * and mapped to dense indices in that order, so index order is name order.
 */
class Complex {
 public:
  // Downward closure of the given top faces (all of equal size d+1).
  static Complex build(const std::vector<std::vector<std::string>>& top_faces);

  int dimension() const { return dim_; }
  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  // -1 when absent.
  int vertex_index(const std::string& name) const;

  // Faces of dimension i in lexicographic order, -1 <= i <= dimension().
  const std::vector<Face>& faces(int i) const;
  std::size_t face_count(int i) const { return faces(i).size(); }
  std::optional<std::size_t> find(const Face& face) const;

  // Comma-joined vertex names.
  std::string key(const Face& face) const;
  // Inverse of key(); throws InvalidInput for unknown vertices or non-faces.
  Face parse_key(const std::string& key) const;

 private:
  int dim_ = -1;
  std::vector<std::string> names_;
  std::map<std::string, int> name_index_;
  std::vector<std::vector<Face>> faces_;
  std::vector<std::map<Face, std::size_t>> index_;
};

class WeightedComplex {
 public:
  WeightedComplex(Complex shell, std::vector<std::vector<Rational>> weights,
                  std::optional<std::vector<int>> partite = std::nullopt);

  const Complex& shell() const { return shell_; }
  int dimension() const { return shell_.dimension(); }
  std::size_t vertex_count() const { return shell_.vertex_count(); }
  const std::vector<Face>& faces(int i) const { return shell_.faces(i); }

  const std::vector<Rational>& weights(int i) const;
  const Rational& weight(int i, std::size_t index) const { return weights(i)[index]; }
  // Throws InvalidInput when the face is not in the complex.
  const Rational& weight(const Face& face) const;

  // Class index per vertex, when the complex carries a partite labeling.
  const std::optional<std::vector<int>>& partite() const { return partite_; }
  // r+1 for an (r+1)-partite labeling, 0 without one.
  int class_count() const;

 private:
  Complex shell_;
  std::vector<std::vector<Rational>> weights_;
  std::optional<std::vector<int>> partite_;
};

// w(y) = 1/|X(d)| on top faces, lower faces by (W2).
WeightedComplex canonical_weights(const Complex& shell, std::optional<std::vector<int>> partite = std::nullopt);

// Given top-face weights (indexed like shell.faces(d)), fill lower faces by (W2).
WeightedComplex weights_from_top(const Complex& shell, const std::vector<Rational>& top,
                                 std::optional<std::vector<int>> partite = std::nullopt);

struct WeightViolation {
  std::string axiom;  // "W1", "W2", "Eq2.1", "positive", "partite"
  Face face;
  int level = 0;      // the ℓ of Eq. (2.1); otherwise the face dimension
  std::string detail;
};

struct ValidationReport {
  std::vector<WeightViolation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_weights(const WeightedComplex& x);

// Faces of dimension <= k with restricted weights. Throws BadDimension.
WeightedComplex skeleton(const WeightedComplex& x, int k);

}  // namespace sheafex
