#include "sheafex/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sheafex {

std::vector<double> DenseMatrix::apply(const std::vector<double>& x) const {
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n_; ++j) s += a_[i * n_ + j] * x[j];
    y[i] = s;
  }
  return y;
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

namespace {

double off_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

SymmetricEigen jacobi_eigen(const DenseMatrix& input, double tolerance, int max_sweeps) {
  const std::size_t n = input.size();
  DenseMatrix a = input;
  DenseMatrix v(n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  SymmetricEigen out;
  out.off_diagonal = off_norm(a);
  while (out.off_diagonal >= tolerance && out.sweeps < max_sweeps) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    ++out.sweeps;
    out.off_diagonal = off_norm(a);
  }
  out.converged = out.off_diagonal < tolerance;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
  for (std::size_t k : order) {
    out.values.push_back(a(k, k));
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v(i, k);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

Compression compress_to_complement(const DenseMatrix& a, const std::vector<std::vector<double>>& basis) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> accepted = basis;
  Compression out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x(n, 0.0);
    x[i] = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : accepted) {
        const double c = dot(x, u);
        for (std::size_t k = 0; k < n; ++k) x[k] -= c * u[k];
      }
    const double norm = std::sqrt(dot(x, x));
    if (norm < 1e-8) continue;
    for (auto& xk : x) xk /= norm;
    accepted.push_back(x);
    out.columns.push_back(std::move(x));
  }
  const std::size_t m = out.columns.size();
  out.matrix = DenseMatrix(m);
  std::vector<std::vector<double>> aq;
  for (const auto& q : out.columns) aq.push_back(a.apply(q));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.matrix(i, j) = dot(out.columns[i], aq[j]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const double s = 0.5 * (out.matrix(i, j) + out.matrix(j, i));
      out.matrix(i, j) = out.matrix(j, i) = s;
    }
  return out;
}

}  // namespace sheafex
