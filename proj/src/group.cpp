#include "sheafex/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace sheafex {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

namespace {

using i128 = __int128;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(((i128(a) * b) % m + m) % m);
}

// g = gcd(a, b) = s·a + t·b with g >= 0.
std::int64_t xgcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t r = a - q * b;
    a = b;
    b = r;
    r = s0 - q * s1;
    s0 = s1;
    s1 = r;
    r = t0 - q * t1;
    t0 = t1;
    t1 = r;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

Element combine(std::int64_t a, const Element& x, std::int64_t b, const Element& y,
                const std::vector<std::int64_t>& m) {
  Element z(x.size());
  for (std::size_t c = 0; c < x.size(); ++c) z[c] = mod(mulmod(a, x[c], m[c]) + mulmod(b, y[c], m[c]), m[c]);
  return z;
}

bool is_zero_vec(const Element& x) {
  return std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; });
}

}  // namespace

Echelon::Echelon(std::vector<std::int64_t> moduli, const std::vector<Element>& generators)
    : moduli_(std::move(moduli)), steps_(moduli_), pivots_(moduli_.size()) {
  const std::size_t j = moduli_.size();
  for (auto m : moduli_)
    if (m < 1) throw Error(ErrorKind::InvalidInput, "moduli must be positive");
  std::vector<Element> rows;
  for (const auto& g : generators) {
    if (g.size() != j) throw Error(ErrorKind::TypeMismatch, "generator has wrong arity");
    Element r(j);
    for (std::size_t c = 0; c < j; ++c) r[c] = mod(g[c], moduli_[c]);
    if (!is_zero_vec(r)) rows.push_back(std::move(r));
  }
  for (std::size_t c = 0; c < j; ++c) {
    const std::int64_t m = moduli_[c];
    std::optional<Element> p;
    std::vector<Element> rest;
    for (auto& r : rows) {
      if (r[c] == 0) {
        rest.push_back(std::move(r));
        continue;
      }
      if (!p) {
        p = std::move(r);
        continue;
      }
      std::int64_t s = 0, t = 0;
      const std::int64_t g = xgcd((*p)[c], r[c], s, t);
      Element np = combine(s, *p, t, r, moduli_);
      Element nr = combine(r[c] / g, *p, -((*p)[c] / g), r, moduli_);
      p = std::move(np);
      if (!is_zero_vec(nr)) rest.push_back(std::move(nr));
    }
    if (p) {
      std::int64_t u = 0, v = 0;
      const std::int64_t d = xgcd((*p)[c], m, u, v);
      if (d != m) {
        Element pivot = combine(u, *p, 0, *p, moduli_);
        Element tail1 = combine(mulmod(v, m / d, m), *p, 0, *p, moduli_);
        Element tail2 = combine(m / d, pivot, 0, pivot, moduli_);
        if (!is_zero_vec(tail1)) rest.push_back(std::move(tail1));
        if (!is_zero_vec(tail2)) rest.push_back(std::move(tail2));
        steps_[c] = d;
        pivots_[c] = std::move(pivot);
      } else {
        // Entry is a multiple of m: already zero mod m, cannot happen for reduced rows.
        rest.push_back(std::move(*p));
      }
    }
    rows = std::move(rest);
    // Rows are zero at c now; drop zeros.
    rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero_vec), rows.end());
  }
}

BigInt Echelon::order() const {
  BigInt o = 1;
  for (std::size_t c = 0; c < moduli_.size(); ++c) o *= moduli_[c] / steps_[c];
  return o;
}

std::vector<Element> Echelon::rows() const {
  std::vector<Element> out;
  for (const auto& p : pivots_)
    if (p) out.push_back(*p);
  return out;
}

Element Echelon::reduce(Element x) const {
  for (std::size_t c = 0; c < moduli_.size(); ++c) {
    x[c] = mod(x[c], moduli_[c]);
    if (!pivots_[c]) continue;
    const std::int64_t q = x[c] / steps_[c];
    if (q == 0) continue;
    const Element& p = *pivots_[c];
    for (std::size_t k = c; k < moduli_.size(); ++k) x[k] = mod(x[k] - mulmod(q, p[k], moduli_[k]), moduli_[k]);
  }
  return x;
}

bool Echelon::contains(const Element& x) const { return is_zero_vec(reduce(x)); }

AbelianGroup::AbelianGroup(std::vector<std::int64_t> moduli, const std::vector<Element>& relations,
                           std::optional<int> prime)
    : relations_(std::move(moduli), relations), prime_(prime), radix_(relations_.steps()) {
  if (prime_)
    for (auto m : relations_.moduli())
      if (m != *prime_) throw Error(ErrorKind::InvalidInput, "field backend needs all moduli equal to p");
}

AbelianGroup AbelianGroup::field(int p, int k) {
  if (p < 2) throw Error(ErrorKind::InvalidInput, "p must be prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error(ErrorKind::InvalidInput, "p must be prime");
  if (k < 0) throw Error(ErrorKind::InvalidInput, "negative dimension");
  return AbelianGroup(std::vector<std::int64_t>(static_cast<std::size_t>(k), p), {}, p);
}

AbelianGroup AbelianGroup::cyclic(std::vector<std::int64_t> moduli) { return AbelianGroup(std::move(moduli)); }

BigInt AbelianGroup::product_order() const {
  BigInt o = 1;
  for (auto m : moduli()) o *= m;
  return o;
}

std::uint64_t AbelianGroup::small_order() const {
  const BigInt o = order();
  if (o > (BigInt(1) << 62)) throw BudgetExceeded("group order", std::uint64_t{1} << 62, ~std::uint64_t{0});
  return o.convert_to<std::uint64_t>();
}

Element AbelianGroup::normalize(Element x) const {
  if (static_cast<int>(x.size()) != rank()) throw Error(ErrorKind::TypeMismatch, "element has wrong arity");
  return relations_.reduce(std::move(x));
}

bool AbelianGroup::is_canonical(const Element& x) const {
  if (static_cast<int>(x.size()) != rank()) return false;
  for (std::size_t c = 0; c < x.size(); ++c)
    if (x[c] < 0 || x[c] >= radix_[c]) return false;
  return true;
}

Element AbelianGroup::add(const Element& a, const Element& b) const {
  Element z(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) z[c] = a[c] + b[c];
  return normalize(std::move(z));
}

Element AbelianGroup::sub(const Element& a, const Element& b) const {
  Element z(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) z[c] = a[c] - b[c];
  return normalize(std::move(z));
}

Element AbelianGroup::neg(const Element& a) const { return sub(zero(), a); }

Element AbelianGroup::scale(std::int64_t k, const Element& a) const {
  Element z(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) z[c] = mulmod(k, a[c], moduli()[c]);
  return normalize(std::move(z));
}

bool AbelianGroup::is_zero(const Element& a) const { return is_zero_vec(normalize(a)); }

std::int64_t AbelianGroup::element_order(const Element& a) const {
  return subgroup_order({a}).convert_to<std::int64_t>();
}

std::uint64_t AbelianGroup::index(const Element& canonical) const {
  std::uint64_t idx = 0;
  for (std::size_t c = 0; c < canonical.size(); ++c)
    idx = idx * static_cast<std::uint64_t>(radix_[c]) + static_cast<std::uint64_t>(canonical[c]);
  return idx;
}

Element AbelianGroup::element(std::uint64_t index) const {
  Element x(radix_.size());
  for (std::size_t c = radix_.size(); c-- > 0;) {
    const auto r = static_cast<std::uint64_t>(radix_[c]);
    x[c] = static_cast<std::int64_t>(index % r);
    index /= r;
  }
  return x;
}

std::vector<Element> AbelianGroup::elements(std::uint64_t cap) const {
  const BigInt o = order();
  if (o > cap) throw BudgetExceeded("group elements", cap, o > (BigInt(1) << 63) ? ~std::uint64_t{0} : o.convert_to<std::uint64_t>());
  const auto n = o.convert_to<std::uint64_t>();
  std::vector<Element> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(element(i));
  return out;
}

Echelon AbelianGroup::with_generators(const std::vector<Element>& generators) const {
  std::vector<Element> rows = relations_.rows();
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != rank()) throw Error(ErrorKind::TypeMismatch, "generator has wrong arity");
    rows.push_back(g);
  }
  return Echelon(moduli(), rows);
}

AbelianGroup AbelianGroup::quotient(const std::vector<Element>& generators) const {
  return AbelianGroup(moduli(), with_generators(generators).rows(), prime_);
}

BigInt AbelianGroup::subgroup_order(const std::vector<Element>& generators) const {
  return with_generators(generators).order() / relations_.order();
}

bool AbelianGroup::in_subgroup(const std::vector<Element>& generators, const Element& x) const {
  return with_generators(generators).contains(x);
}

std::vector<Element> AbelianGroup::subgroup_elements(const std::vector<Element>& generators,
                                                     std::uint64_t cap) const {
  const BigInt o = subgroup_order(generators);
  if (o > cap) throw BudgetExceeded("subgroup elements", cap, o > (BigInt(1) << 63) ? ~std::uint64_t{0} : o.convert_to<std::uint64_t>());
  std::vector<Element> members{zero()};
  std::unordered_set<std::uint64_t> seen{index(zero())};
  for (const auto& g0 : generators) {
    const Element g = normalize(g0);
    const std::size_t base = members.size();
    // Smallest k with k·g in the current subgroup S gives S + <g> = ∪_{j<k} (S + j·g).
    for (Element kg = g; !seen.count(index(kg)); kg = add(kg, g))
      for (std::size_t i = 0; i < base; ++i) {
        Element x = add(members[i], kg);
        if (seen.insert(index(x)).second) members.push_back(std::move(x));
      }
  }
  std::sort(members.begin(), members.end(),
            [&](const Element& a, const Element& b) { return index(a) < index(b); });
  return members;
}

bool AbelianGroup::operator==(const AbelianGroup& other) const {
  return moduli() == other.moduli() && radix_ == other.radix_ && relations_.rows() == other.relations_.rows();
}

std::string AbelianGroup::describe() const {
  std::ostringstream os;
  if (prime_) {
    os << "F_" << *prime_ << "^" << rank();
  } else {
    os << "Z/";
    for (std::size_t c = 0; c < moduli().size(); ++c) os << (c ? "xZ/" : "") << moduli()[c];
    if (moduli().empty()) os << "1";
  }
  if (relations_.order() != 1) os << " / <" << relations_.rows().size() << " relations>";
  return os.str();
}

Homomorphism::Homomorphism(AbelianGroup source, AbelianGroup target, std::vector<std::vector<std::int64_t>> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  const auto rows = static_cast<std::size_t>(target_.rank());
  const auto cols = static_cast<std::size_t>(source_.rank());
  if (matrix_.size() != rows) throw Error(ErrorKind::TypeMismatch, "homomorphism matrix has wrong row count");
  for (std::size_t r = 0; r < rows; ++r) {
    if (matrix_[r].size() != cols) throw Error(ErrorKind::TypeMismatch, "homomorphism matrix has wrong column count");
    for (auto& v : matrix_[r]) v = mod(v, target_.moduli()[r]);
  }
  // Well-definedness: m_c·e_c and every relation row of the source map to zero.
  for (std::size_t c = 0; c < cols; ++c) {
    Element x(cols, 0);
    x[c] = source_.moduli()[c];
    if (!target_.is_zero(apply(x)))
      throw Error(ErrorKind::TypeMismatch, "matrix is not compatible with the source moduli");
  }
  for (const auto& rel : source_.relations().rows())
    if (!target_.is_zero(apply(rel)))
      throw Error(ErrorKind::TypeMismatch, "matrix does not vanish on the source relations");
}

Homomorphism Homomorphism::identity(const AbelianGroup& g) { return projection(g, g); }

Homomorphism Homomorphism::zero(const AbelianGroup& source, const AbelianGroup& target) {
  return Homomorphism(source, target,
                      std::vector<std::vector<std::int64_t>>(static_cast<std::size_t>(target.rank()),
                                                             std::vector<std::int64_t>(static_cast<std::size_t>(source.rank()), 0)));
}

Homomorphism Homomorphism::projection(const AbelianGroup& source, const AbelianGroup& target) {
  if (!source.same_coordinates(target)) throw Error(ErrorKind::TypeMismatch, "projection needs equal coordinates");
  const auto n = static_cast<std::size_t>(source.rank());
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return Homomorphism(source, target, std::move(m));
}

Element Homomorphism::apply(const Element& x) const {
  if (static_cast<int>(x.size()) != source_.rank()) throw Error(ErrorKind::TypeMismatch, "argument has wrong arity");
  Element y(matrix_.size(), 0);
  for (std::size_t r = 0; r < matrix_.size(); ++r) {
    const std::int64_t m = target_.moduli()[r];
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < x.size(); ++c) acc = mod(acc + mulmod(matrix_[r][c], x[c], m), m);
    y[r] = acc;
  }
  return target_.normalize(std::move(y));
}

Homomorphism Homomorphism::then(const Homomorphism& g) const {
  if (!(g.source() == target_)) throw Error(ErrorKind::TypeMismatch, "composition of incompatible maps");
  const std::size_t rows = g.matrix_.size(), mid = matrix_.size(), cols = static_cast<std::size_t>(source_.rank());
  std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::int64_t mr = g.target().moduli()[r];
    for (std::size_t k = 0; k < mid; ++k)
      for (std::size_t c = 0; c < cols; ++c) m[r][c] = mod(m[r][c] + mulmod(g.matrix_[r][k], matrix_[k][c], mr), mr);
  }
  return Homomorphism(source_, g.target(), std::move(m));
}

bool Homomorphism::same_map(const Homomorphism& other) const {
  if (!(source_ == other.source_) || !(target_ == other.target_)) return false;
  for (int c = 0; c < source_.rank(); ++c) {
    Element x = source_.zero();
    x[static_cast<std::size_t>(c)] = 1;
    if (apply(x) != other.apply(x)) return false;
  }
  return true;
}

std::vector<std::uint32_t> Homomorphism::table(std::uint64_t cap) const {
  const std::uint64_t n = source_.order() > cap ? cap + 1 : source_.small_order();
  if (n > cap) throw BudgetExceeded("homomorphism table", cap, n);
  if (target_.order() > BigInt(0xffffffffULL)) throw BudgetExceeded("homomorphism table target", 0xffffffffULL, 0);
  std::vector<std::uint32_t> t(n);
  for (std::uint64_t i = 0; i < n; ++i) t[i] = static_cast<std::uint32_t>(target_.index(apply(source_.element(i))));
  return t;
}

std::vector<Element> Homomorphism::kernel(std::uint64_t cap) const {
  std::vector<Element> out;
  for (const auto& x : source_.elements(cap))
    if (target_.is_zero(apply(x))) out.push_back(x);
  return out;
}

DisjointnessReport check_linear_disjoint(const AbelianGroup& ambient, const std::vector<std::vector<Element>>& subgroups,
                                         std::uint64_t cap) {
  DisjointnessReport rep;
  std::vector<Element> running;
  BigInt running_order = 1;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    const BigInt oi = ambient.subgroup_order(subgroups[i]);
    std::vector<Element> next = running;
    next.insert(next.end(), subgroups[i].begin(), subgroups[i].end());
    const BigInt on = ambient.subgroup_order(next);
    if (on == running_order * oi) {
      running = std::move(next);
      running_order = on;
      continue;
    }
    rep.disjoint = false;
    rep.first_overlap = static_cast<int>(i);
    // A nonzero r ∈ R_i ∩ (R_0 + … + R_{i−1}), split back into the earlier summands.
    Element r;
    for (const auto& x : ambient.subgroup_elements(subgroups[i], cap)) {
      if (ambient.is_zero(x) || !ambient.in_subgroup(running, x)) continue;
      r = x;
      break;
    }
    std::vector<Element> cert(subgroups.size(), ambient.zero());
    cert[i] = ambient.neg(r);
    Element remaining = r;
    for (std::size_t l = i; l-- > 0;) {
      std::vector<Element> earlier;
      for (std::size_t k = 0; k < l; ++k) earlier.insert(earlier.end(), subgroups[k].begin(), subgroups[k].end());
      for (const auto& y : ambient.subgroup_elements(subgroups[l], cap)) {
        const Element rest = ambient.sub(remaining, y);
        if (ambient.in_subgroup(earlier, rest)) {
          cert[l] = y;
          remaining = rest;
          break;
        }
      }
    }
    rep.certificate = std::move(cert);
    return rep;
  }
  return rep;
}

}  // namespace sheafex
