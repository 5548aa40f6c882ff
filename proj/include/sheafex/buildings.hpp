#pragma once

#include "sheafex/complex.hpp"
#include "sheafex/field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sheafex {

/** Subspace of F_q^dim by its reduced row-echelon basis. */
struct Subspace {
  int ambient = 0;
  std::vector<std::vector<int>> rows;  // RREF over the field, rows ordered by pivot
  int dimension() const { return static_cast<int>(rows.size()); }
  bool operator==(const Subspace& o) const { return ambient == o.ambient && rows == o.rows; }
  bool operator<(const Subspace& o) const { return rows < o.rows; }
};

// RREF of the row space of `vectors`.
Subspace span(const FiniteField& f, int ambient, const std::vector<std::vector<int>>& vectors);
// All k-dimensional subspaces of F_q^ambient, by pivot pattern then entries.
std::vector<Subspace> subspaces(const FiniteField& f, int ambient, int k,
                                std::uint64_t cap = kDefaultEnumerationBudget);
bool contains(const FiniteField& f, const Subspace& big, const Subspace& small);
// Number of k-dimensional subspaces of F_q^n.
BigInt gaussian_binomial(int n, int k, int q);
// Vertex name "<dim>:<entries>" with entries dot-separated.
std::string subspace_name(const Subspace& s);

/**
 * A_n(F_q): flags of nontrivial proper subspaces of F_q^{n+1}, partite by
 * dimension (class dim−1), canonical weights. Throws BudgetExceeded when the
 * number of maximal flags exceeds `cap`.
 */
WeightedComplex build_An(int q, int n, std::uint64_t cap = kDefaultEnumerationBudget);

// min over (d−1)-faces of the number of d-faces containing it.
int thickness(const WeightedComplex& x);

struct CoxeterDiagram {
  std::string name;
  int rank = 0;
  struct Bond {
    int a = 0, b = 0, label = 3;
  };
  std::vector<Bond> bonds;
  // m(T) = max({2} ∪ labels).
  int m() const;
  // Dimension of the building, rank − 1.
  int r() const { return rank - 1; }
  // "A<n>", "C2", "C3", "G2". Throws InvalidInput otherwise.
  static CoxeterDiagram preset(const std::string& name);
};

// λ = √(m−2)/(√q − (r−1)√(m−2)); throws PreconditionViolated unless q >= r²(m−2).
double theorem72_bound(double q, int r, int m);

struct CorollaryBounds {
  double cor74 = 0.0;          // 1 − λ
  double cor76 = 0.0;          // as stated, with t and s bounded by 2/(q+r−1)
  double cor76_refined = 0.0;  // for r = 1 with s eliminated: last term −2/(q+r−1)
};

CorollaryBounds corollary_bounds(double q, int r, int m);

struct Lemma75Report {
  Rational max_ratio;  // max w(e)/w(x) over incident pairs
  Rational bound;      // 2/(q+r−1)
  Rational slack;      // bound − max_ratio
  int q = 0;
  int r = 0;
  bool holds() const { return slack >= 0; }
};

// Checks max w(e)/w(x) <= 2/(q+r−1) with r = dim X and `q` the thickness fed in.
Lemma75Report check_lemma75(const WeightedComplex& x, int q);

struct ThresholdRow {
  int dimension = 0;
  std::string type;
  std::string formula;
  int threshold = 0;  // least q with cor76_refined > 0 from which it stays positive
};

// Rows A2, C2, G2, A3, C3 with thresholds found by scanning q upward.
std::vector<ThresholdRow> table77();
std::string table77_csv();

}  // namespace sheafex
