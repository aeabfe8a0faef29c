#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "eigpert/gaussian_rational.hpp"
#include "eigpert/poly.hpp"

namespace eigpert {

/// Dense row-major matrix of Gaussian rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  /// Throws InputError when entries.size() != rows * cols.
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);
  /// Row-list literal; rows must have equal length.
  ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix scalar(std::size_t n, const GaussianRational& c);
  static ExactMatrix diagonal(const std::vector<GaussianRational>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  GaussianRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<GaussianRational>& entries() const { return entries_; }

  ExactMatrix conjugate_transpose() const;
  GaussianRational trace() const;

  ExactMatrix& operator+=(const ExactMatrix& rhs);
  ExactMatrix& operator-=(const ExactMatrix& rhs);
  ExactMatrix& operator*=(const GaussianRational& c);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const GaussianRational& c) { return a *= c; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> entries_;
};

/// Throws InputError naming `what` unless m is square.
void require_square(const ExactMatrix& m, const char* what);

/// Exact rank by fraction-free (Bareiss) elimination after clearing
/// denominators; the pivot is the first nonzero entry of the working
/// submatrix in row-major order, moved into place by a row and a column swap.
std::size_t rank(const ExactMatrix& m);

/// Exact determinant of a square matrix by the same elimination.
GaussianRational determinant(const ExactMatrix& m);

/// p(M) by Horner's rule.
ExactMatrix evaluate(const Poly& p, const ExactMatrix& m);

}  // namespace eigpert
