#pragma once

#include <cstddef>
#include <vector>

namespace sheafex {

/** Dense row-major square matrix of doubles. */
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  std::vector<double> apply(const std::vector<double>& x) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

struct SymmetricEigen {
  std::vector<double> values;                // descending
  std::vector<std::vector<double>> vectors;  // vectors[k] is the unit eigenvector of values[k]
  int sweeps = 0;
  double off_diagonal = 0.0;                 // Frobenius norm of the off-diagonal part at exit
  bool converged = false;
};

/**
 * Cyclic Jacobi rotations. Stops when the off-diagonal Frobenius norm drops
 * below `tolerance` or after `max_sweeps` sweeps.
 */
SymmetricEigen jacobi_eigen(const DenseMatrix& a, double tolerance = 1e-12, int max_sweeps = 100);

// Compression Qᵀ A Q onto the orthogonal complement of the span of `basis`
// (orthonormal vectors). Returns the compressed matrix and the columns of Q.
struct Compression {
  DenseMatrix matrix;
  std::vector<std::vector<double>> columns;
};
Compression compress_to_complement(const DenseMatrix& a, const std::vector<std::vector<double>>& basis);

double dot(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace sheafex
