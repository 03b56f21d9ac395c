#include "wdvv/linalg.hpp"

#include <cmath>

namespace wdvv {

std::optional<std::vector<Scalar>> solve_exact(Mat<Scalar> a, std::vector<Scalar> b,
                                               std::vector<int>* free_cols) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  if (b.size() != rows) throw std::invalid_argument("solve_exact: size mismatch");

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Scalar inv = Scalar(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Scalar f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;  // inconsistent

  std::vector<Scalar> x(cols, Scalar(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  if (free_cols) {
    free_cols->clear();
    std::size_t k = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      if (k < pivot_col.size() && pivot_col[k] == c)
        ++k;
      else
        free_cols->push_back(static_cast<int>(c));
    }
  }
  return x;
}

std::optional<std::vector<double>> solve_double(Mat<double> a, std::vector<double> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve_double: size mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::fabs(a[i][c]) > std::fabs(a[p][c])) p = i;
    if (std::fabs(a[p][c]) < 1e-300) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      const double f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace wdvv
