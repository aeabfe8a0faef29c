#include "eigpert/matrix.hpp"

#include <utility>

#include "eigpert/errors.hpp"

namespace eigpert {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw InputError("matrix entry count " + std::to_string(entries_.size()) + " does not match " +
                     std::to_string(rows) + "x" + std::to_string(cols));
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InputError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) { return scalar(n, 1); }

ExactMatrix ExactMatrix::scalar(std::size_t n, const GaussianRational& c) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<GaussianRational>& d) {
  ExactMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::conjugate_transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
  return t;
}

GaussianRational ExactMatrix::trace() const {
  require_square(*this, "trace");
  GaussianRational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix sum: dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix difference: dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussianRational& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product: dimension mismatch");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

void require_square(const ExactMatrix& m, const char* what) {
  if (!m.is_square())
    throw InputError(std::string(what) + " requires a square matrix, got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
}

namespace {

struct Elimination {
  std::size_t rank = 0;
  GaussianRational det;  // meaningful only for square input
};

Elimination bareiss(ExactMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  // Clear denominators row by row so the elimination stays in Z[i].
  GaussianRational scaling = 1;
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), common_denominator(a(r, c)).get_mpz_t());
    if (l != 1) {
      GaussianRational f{Rational(l)};
      for (std::size_t c = 0; c < cols; ++c) a(r, c) *= f;
      scaling *= f;
    }
  }

  bool negate = false;
  GaussianRational prev = 1;
  std::size_t k = 0;
  const std::size_t steps = rows < cols ? rows : cols;
  for (; k < steps; ++k) {
    std::size_t pr = rows;
    std::size_t pc = cols;
    for (std::size_t r = k; r < rows && pr == rows; ++r)
      for (std::size_t c = k; c < cols; ++c)
        if (!a(r, c).is_zero()) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == rows) break;
    if (pr != k) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(a(k, c), a(pr, c));
      negate = !negate;
    }
    if (pc != k) {
      for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, k), a(r, pc));
      negate = !negate;
    }
    const GaussianRational pivot = a(k, k);
    for (std::size_t i = k + 1; i < rows; ++i) {
      const GaussianRational lead = a(i, k);
      for (std::size_t j = k + 1; j < cols; ++j) {
        GaussianRational v = pivot * a(i, j);
        if (!lead.is_zero()) v -= lead * a(k, j);
        if (!prev.is_one()) v /= prev;
        a(i, j) = std::move(v);
      }
      a(i, k) = GaussianRational{};
    }
    prev = pivot;
  }

  Elimination out;
  out.rank = k;
  if (rows == cols) {
    if (k < rows) {
      out.det = GaussianRational{};
    } else {
      out.det = rows == 0 ? GaussianRational(1) : a(rows - 1, rows - 1) / scaling;
      if (negate) out.det = -out.det;
    }
  }
  return out;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) { return bareiss(m).rank; }

GaussianRational determinant(const ExactMatrix& m) {
  require_square(m, "determinant");
  return bareiss(m).det;
}

ExactMatrix evaluate(const Poly& p, const ExactMatrix& m) {
  require_square(m, "matrix polynomial evaluation");
  const std::size_t n = m.rows();
  ExactMatrix acc(n, n);
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[k];
  }
  return acc;
}

}  // namespace eigpert
