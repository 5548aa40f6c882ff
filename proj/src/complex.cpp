#include "sheafex/complex.hpp"

#include "sheafex/error.hpp"

#include <algorithm>
#include <set>

namespace sheafex {

namespace {

// All subsets of a sorted face, each sorted.
template <class Fn>
void for_each_subface(const Face& top, Fn&& fn) {
  const std::size_t n = top.size();
  Face sub;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    sub.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) sub.push_back(top[i]);
    fn(sub);
  }
}

}  // namespace

Complex Complex::build(const std::vector<std::vector<std::string>>& top_faces) {
  if (top_faces.empty()) throw Error(ErrorKind::EmptyInput, "no top faces");
  const std::size_t size = top_faces.front().size();
  if (size == 0) throw Error(ErrorKind::EmptyInput, "top faces are empty");
  std::set<std::string> names;
  for (const auto& f : top_faces) {
    if (f.size() != size)
      throw Error(ErrorKind::MixedDimension, "top faces of sizes " + std::to_string(size) + " and " +
                                                 std::to_string(f.size()));
    std::set<std::string> distinct(f.begin(), f.end());
    if (distinct.size() != f.size()) throw Error(ErrorKind::InvalidInput, "repeated vertex in a top face");
    for (const auto& v : f) {
      if (v.empty() || v.find(',') != std::string::npos)
        throw Error(ErrorKind::InvalidInput, "vertex names must be nonempty and comma-free: '" + v + "'");
      names.insert(v);
    }
  }

  Complex c;
  c.dim_ = static_cast<int>(size) - 1;
  c.names_.assign(names.begin(), names.end());
  for (std::size_t i = 0; i < c.names_.size(); ++i) c.name_index_[c.names_[i]] = static_cast<int>(i);

  std::vector<std::set<Face>> by_dim(size + 1);
  for (const auto& f : top_faces) {
    Face top;
    for (const auto& v : f) top.push_back(c.name_index_.at(v));
    std::sort(top.begin(), top.end());
    for_each_subface(top, [&](const Face& sub) { by_dim[sub.size()].insert(sub); });
  }
  c.faces_.resize(size + 1);
  c.index_.resize(size + 1);
  for (std::size_t i = 0; i <= size; ++i) {
    c.faces_[i].assign(by_dim[i].begin(), by_dim[i].end());
    for (std::size_t j = 0; j < c.faces_[i].size(); ++j) c.index_[i].emplace(c.faces_[i][j], j);
  }
  return c;
}

int Complex::vertex_index(const std::string& name) const {
  auto it = name_index_.find(name);
  return it == name_index_.end() ? -1 : it->second;
}

const std::vector<Face>& Complex::faces(int i) const {
  if (i < -1 || i > dim_) throw Error(ErrorKind::BadDimension, "no faces of dimension " + std::to_string(i));
  return faces_[static_cast<std::size_t>(i + 1)];
}

std::optional<std::size_t> Complex::find(const Face& face) const {
  const int i = face_dimension(face);
  if (i > dim_) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(i + 1)];
  auto it = idx.find(face);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::string Complex::key(const Face& face) const {
  std::string out;
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) out += ',';
    out += names_[static_cast<std::size_t>(face[i])];
  }
  return out;
}

Face Complex::parse_key(const std::string& key) const {
  Face face;
  if (!key.empty()) {
    std::size_t start = 0;
    while (true) {
      const auto comma = key.find(',', start);
      const std::string name = key.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      const int v = vertex_index(name);
      if (v < 0) throw Error(ErrorKind::InvalidInput, "unknown vertex '" + name + "' in face key '" + key + "'");
      face.push_back(v);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  std::sort(face.begin(), face.end());
  if (!find(face)) throw Error(ErrorKind::InvalidInput, "'" + key + "' is not a face");
  return face;
}

WeightedComplex::WeightedComplex(Complex shell, std::vector<std::vector<Rational>> weights,
                                 std::optional<std::vector<int>> partite)
    : shell_(std::move(shell)), weights_(std::move(weights)), partite_(std::move(partite)) {
  if (weights_.size() != static_cast<std::size_t>(shell_.dimension() + 2))
    throw Error(ErrorKind::InvalidInput, "weight table has wrong number of dimensions");
  for (int i = -1; i <= shell_.dimension(); ++i)
    if (weights_[static_cast<std::size_t>(i + 1)].size() != shell_.face_count(i))
      throw Error(ErrorKind::InvalidInput, "weight table size mismatch in dimension " + std::to_string(i));
  if (partite_ && partite_->size() != shell_.vertex_count())
    throw Error(ErrorKind::InvalidInput, "partite labeling does not cover every vertex");
  if (partite_)
    for (int c : *partite_)
      if (c < 0) throw Error(ErrorKind::InvalidInput, "negative partite class");
}

const std::vector<Rational>& WeightedComplex::weights(int i) const {
  if (i < -1 || i > dimension()) throw Error(ErrorKind::BadDimension, "no faces of dimension " + std::to_string(i));
  return weights_[static_cast<std::size_t>(i + 1)];
}

const Rational& WeightedComplex::weight(const Face& face) const {
  auto idx = shell_.find(face);
  if (!idx) throw Error(ErrorKind::InvalidInput, "not a face: " + shell_.key(face));
  return weights(face_dimension(face))[*idx];
}

int WeightedComplex::class_count() const {
  if (!partite_ || partite_->empty()) return 0;
  return *std::max_element(partite_->begin(), partite_->end()) + 1;
}

WeightedComplex weights_from_top(const Complex& shell, const std::vector<Rational>& top,
                                 std::optional<std::vector<int>> partite) {
  const int d = shell.dimension();
  if (top.size() != shell.face_count(d)) throw Error(ErrorKind::InvalidInput, "one weight per top face required");
  std::vector<std::vector<Rational>> w(static_cast<std::size_t>(d + 2));
  for (int i = -1; i <= d; ++i) w[static_cast<std::size_t>(i + 1)].assign(shell.face_count(i), Rational(0));
  const auto& tops = shell.faces(d);
  for (std::size_t j = 0; j < tops.size(); ++j)
    for_each_subface(tops[j], [&](const Face& sub) {
      w[sub.size()][*shell.find(sub)] += top[j];
    });
  for (int i = -1; i < d; ++i) {
    const Rational scale = binomial(d + 1, i + 1);
    for (auto& x : w[static_cast<std::size_t>(i + 1)]) x /= scale;
  }
  return WeightedComplex(shell, std::move(w), std::move(partite));
}

WeightedComplex canonical_weights(const Complex& shell, std::optional<std::vector<int>> partite) {
  const std::size_t n = shell.face_count(shell.dimension());
  return weights_from_top(shell, std::vector<Rational>(n, Rational(1, static_cast<long>(n))), std::move(partite));
}

ValidationReport validate_weights(const WeightedComplex& x) {
  ValidationReport report;
  const Complex& c = x.shell();
  const int d = c.dimension();

  for (int i = -1; i <= d; ++i)
    for (std::size_t j = 0; j < c.face_count(i); ++j)
      if (x.weight(i, j) <= 0)
        report.violations.push_back({"positive", c.faces(i)[j], i, "weight " + to_string(x.weight(i, j))});

  Rational total = 0;
  for (const auto& w : x.weights(d)) total += w;
  if (total != 1) report.violations.push_back({"W1", {}, d, "top weights sum to " + to_string(total)});

  // acc[l][k+1][idx] = sum of w(y) over y in X(l) containing the k-face idx.
  for (int l = 0; l <= d; ++l) {
    std::vector<std::vector<Rational>> acc(static_cast<std::size_t>(l + 1));
    for (int k = -1; k < l; ++k) acc[static_cast<std::size_t>(k + 1)].assign(c.face_count(k), Rational(0));
    const auto& ys = c.faces(l);
    for (std::size_t j = 0; j < ys.size(); ++j)
      for_each_subface(ys[j], [&](const Face& sub) {
        if (face_dimension(sub) < l) acc[sub.size()][*c.find(sub)] += x.weight(l, j);
      });
    for (int k = -1; k < l; ++k) {
      const Rational factor = binomial(l + 1, k + 1);
      for (std::size_t i = 0; i < c.face_count(k); ++i) {
        const Rational& sum = acc[static_cast<std::size_t>(k + 1)][i];
        const Rational expected = factor * x.weight(k, i);
        if (sum == expected) continue;
        const std::string detail = "sum over containing " + std::to_string(l) + "-faces is " + to_string(sum) +
                                   ", expected " + to_string(expected);
        if (l == d)
          report.violations.push_back({"W2", c.faces(k)[i], k, detail});
        else
          report.violations.push_back({"Eq2.1", c.faces(k)[i], l, detail});
      }
    }
  }

  if (const auto& part = x.partite()) {
    for (const auto& top : c.faces(d)) {
      std::set<int> classes;
      for (int v : top) classes.insert((*part)[static_cast<std::size_t>(v)]);
      if (classes.size() != top.size())
        report.violations.push_back({"partite", top, d, "two vertices share a class"});
    }
  }
  return report;
}

WeightedComplex skeleton(const WeightedComplex& x, int k) {
  if (k < 0 || k > x.dimension())
    throw Error(ErrorKind::BadDimension, "skeleton dimension " + std::to_string(k) + " outside [0, " +
                                             std::to_string(x.dimension()) + "]");
  if (k == x.dimension()) return x;
  const Complex& c = x.shell();
  std::vector<std::vector<std::string>> tops;
  for (const auto& f : c.faces(k)) {
    std::vector<std::string> names;
    for (int v : f) names.push_back(c.vertex_names()[static_cast<std::size_t>(v)]);
    tops.push_back(std::move(names));
  }
  Complex sk = Complex::build(tops);
  std::vector<std::vector<Rational>> w;
  for (int i = -1; i <= k; ++i) w.push_back(x.weights(i));
  return WeightedComplex(std::move(sk), std::move(w), x.partite());
}

}  // namespace sheafex
