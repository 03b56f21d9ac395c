// Small dense exact linear algebra over any field-like element type
// (Scalar, RationalFunction), plus a double-precision solver for Newton
// iterations. Matrices are row-major vectors of rows; dimensions stay tiny
// (n <= 5), so cofactor expansion is fine.
#pragma once

#include "wdvv/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace wdvv {

template <typename T>
using Mat = std::vector<std::vector<T>>;

template <typename T>
T det(const Mat<T>& a) {
  const std::size_t n = a.size();
  if (n == 0) return T(Scalar(1));
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("det: non-square matrix");
  if (n == 1) return a[0][0];
  T acc{};
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    Mat<T> minor(n - 1, std::vector<T>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = a[r][c];
      }
    }
    const T term = a[0][j] * det(minor);
    acc = (sign > 0) ? acc + term : acc - term;
    sign = -sign;
  }
  return acc;
}

// adj(a) with a * adj(a) = det(a) * I
template <typename T>
Mat<T> adjugate(const Mat<T>& a) {
  const std::size_t n = a.size();
  Mat<T> adj(n, std::vector<T>(n));
  if (n == 1) {
    adj[0][0] = T(Scalar(1));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat<T> minor(n - 1, std::vector<T>(n - 1));
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor[rr][cc++] = a[r][c];
        }
        ++rr;
      }
      T m = det(minor);
      adj[j][i] = (((i + j) % 2) == 0) ? m : T{} - m;  // transpose of cofactors
    }
  return adj;
}

// Exact reduced row echelon solve of A x = b (A may be rectangular or rank
// deficient). Returns the particular solution with every free variable set
// to zero, or nullopt if inconsistent; `free_cols`, when given, receives the
// indices of the free columns.
std::optional<std::vector<Scalar>> solve_exact(Mat<Scalar> a, std::vector<Scalar> b,
                                               std::vector<int>* free_cols = nullptr);

// Partial-pivoting Gaussian solve in doubles; nullopt when the pivot
// collapses numerically.
std::optional<std::vector<double>> solve_double(Mat<double> a, std::vector<double> b);

}  // namespace wdvv
