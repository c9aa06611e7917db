#pragma once

#include <cstdint>
#include <vector>

#include "mtc/scalars.hpp"

namespace mtc {

// Small dense complex matrix, row-major. Desk scale (n <= 64), no BLAS.
struct CMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Complex> a;

  CMatrix() = default;
  CMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Complex& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Complex& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }

  static CMatrix identity(int n);
  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix operator*(const CMatrix& o) const;
  double max_abs_diff(const CMatrix& o) const;
  double max_abs() const;
};

// Dense integer matrix with overflow-checked arithmetic.
struct IMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;

  IMatrix() = default;
  IMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  std::int64_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const std::int64_t& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }

  static IMatrix identity(int n);
  IMatrix transpose() const;
  IMatrix operator*(const IMatrix& o) const;  // throws on overflow
  IMatrix operator-(const IMatrix& o) const;
  IMatrix operator+(const IMatrix& o) const;
  bool operator==(const IMatrix& o) const = default;
  bool is_zero() const;
  std::int64_t min_entry() const;
};

// Overflow-checked int64 helpers; throw std::overflow_error.
std::int64_t checked_add(std::int64_t x, std::int64_t y);
std::int64_t checked_mul(std::int64_t x, std::int64_t y);

}  // namespace mtc
