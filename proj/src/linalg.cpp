#include "mtc/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace mtc {

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = std::conj(at(i, j));
  return r;
}

CMatrix CMatrix::transpose() const {
  CMatrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("CMatrix: shape mismatch");
  CMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Complex v = at(i, k);
      if (v == Complex{}) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

double CMatrix::max_abs_diff(const CMatrix& o) const {
  if (rows != o.rows || cols != o.cols)
    throw std::invalid_argument("CMatrix: shape mismatch");
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - o.a[i]));
  return worst;
}

double CMatrix::max_abs() const {
  double worst = 0.0;
  for (const auto& v : a) worst = std::max(worst, std::abs(v));
  return worst;
}

IMatrix IMatrix::identity(int n) {
  IMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMatrix IMatrix::transpose() const {
  IMatrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

IMatrix IMatrix::operator*(const IMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("IMatrix: shape mismatch");
  IMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const std::int64_t v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols; ++j)
        r.at(i, j) = checked_add(r.at(i, j), checked_mul(v, o.at(k, j)));
    }
  return r;
}

IMatrix IMatrix::operator-(const IMatrix& o) const {
  if (rows != o.rows || cols != o.cols)
    throw std::invalid_argument("IMatrix: shape mismatch");
  IMatrix r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = checked_add(a[i], -o.a[i]);
  return r;
}

IMatrix IMatrix::operator+(const IMatrix& o) const {
  if (rows != o.rows || cols != o.cols)
    throw std::invalid_argument("IMatrix: shape mismatch");
  IMatrix r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = checked_add(a[i], o.a[i]);
  return r;
}

bool IMatrix::is_zero() const {
  for (const auto v : a)
    if (v != 0) return false;
  return true;
}

std::int64_t IMatrix::min_entry() const {
  std::int64_t m = a.empty() ? 0 : a[0];
  for (const auto v : a) m = std::min(m, v);
  return m;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(x, y, &r))
    throw std::overflow_error("integer overflow in fusion arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(x, y, &r))
    throw std::overflow_error("integer overflow in fusion arithmetic");
  return r;
}

}  // namespace mtc
