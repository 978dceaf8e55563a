#ifndef FQK_PERRON_HPP
#define FQK_PERRON_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "fqk/error.hpp"
#include "fqk/integer.hpp"

namespace fqk {

struct PerronResult {
  double value = 0.0;
  std::vector<double> vector;  // max-normalized, entrywise non-negative
  std::size_t iterations = 0;
};

/// Perron root and eigenvector of a non-negative square matrix by power
/// iteration on A + I. The shift makes the iteration aperiodic (permutation
/// matrices, bipartite adjacency) without changing the eigenvector.
inline PerronResult perron(const std::vector<std::vector<double>>& a, double tol = 1e-10,
                           std::size_t cap = 1'000'000) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "Perron input is not square");
  PerronResult res;
  if (n == 0) return res;

  std::vector<double> x(n, 1.0), y(n);
  for (std::size_t it = 1; it <= cap; ++it) {
    double top = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = x[i];
      for (std::size_t j = 0; j < n; ++j) s += a[i][j] * x[j];
      y[i] = s;
      top = std::max(top, s);
    }
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] /= top;
      diff = std::max(diff, std::abs(y[i] - x[i]));
    }
    x.swap(y);
    if (diff < tol) {
      double value = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += a[i][j] * x[j];
        value = std::max(value, s);
      }
      res.value = value;
      res.vector = x;
      res.iterations = it;
      return res;
    }
  }
  throw Error(ErrorKind::NonConvergence,
              "power iteration did not converge within " + std::to_string(cap) + " iterations");
}

inline PerronResult perron(const IntMatrix& a, double tol = 1e-10, std::size_t cap = 1'000'000) {
  if (!a.square()) throw Error(ErrorKind::DimensionMismatch, "Perron input is not square");
  if (!a.is_nonnegative()) throw Error(ErrorKind::InvalidDimension, "matrix has negative entries");
  return perron(a.to_double(), tol, cap);
}

}  // namespace fqk

#endif  // FQK_PERRON_HPP
