#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eigpert/fuzz.hpp"
#include "eigpert/matrix.hpp"
#include "eigpert/poly.hpp"

namespace eigpert::testing {

inline GaussianRational gi(long re, long im) { return {Rational(re), Rational(im)}; }
inline Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// prod (x - roots[k])^mults[k]
inline Poly from_roots(const std::vector<GaussianRational>& roots, const std::vector<unsigned>& mults) {
  Poly p = Poly::constant(1);
  for (std::size_t k = 0; k < roots.size(); ++k) p *= pow(Poly::linear(roots[k]), mults[k]);
  return p;
}

/// Companion matrix of a monic polynomial: ones below the diagonal, last
/// column holds -c_0 .. -c_{n-1}.
inline ExactMatrix companion(const Poly& p) {
  const auto n = static_cast<std::size_t>(p.degree());
  ExactMatrix m(n, n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -p.coeff(i);
  return m;
}

inline GaussianRational random_gaussian(RandomStream& rng, long bound, long max_den) {
  return {Rational(rng.uniform(-bound, bound), rng.uniform(1, max_den)),
          Rational(rng.uniform(-bound, bound), rng.uniform(1, max_den))};
}

inline ExactMatrix random_matrix(std::size_t rows, std::size_t cols, RandomStream& rng, long bound,
                                 long max_den) {
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_gaussian(rng, bound, max_den);
  return m;
}

/// Schoolbook coefficient convolution, kept apart from Poly's multiply.
inline std::vector<GaussianRational> convolve(const std::vector<GaussianRational>& a,
                                              const std::vector<GaussianRational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<GaussianRational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// det(tI - M) through the determinant routine, an oracle for char_poly(M)(t).
inline GaussianRational det_shift(const ExactMatrix& m, const GaussianRational& t) {
  return determinant(ExactMatrix::scalar(m.rows(), t) - m);
}

/// Jordan block sizes at lambda from the rank sequence of (M - lambda I)^k:
/// the number of blocks of size >= k is rank_{k-1} - rank_k.
inline std::vector<std::size_t> block_sizes_by_rank(const ExactMatrix& m, const GaussianRational& lambda) {
  const std::size_t n = m.rows();
  const ExactMatrix shifted = m - ExactMatrix::scalar(n, lambda);
  std::vector<std::size_t> ranks{n};
  ExactMatrix power = ExactMatrix::identity(n);
  while (true) {
    power = power * shifted;
    ranks.push_back(rank(power));
    if (ranks.back() == ranks[ranks.size() - 2]) break;
  }
  std::vector<std::size_t> at_least;
  for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
  std::vector<std::size_t> sizes;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    const std::size_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
    for (std::size_t c = 0; c < at_least[k] - next; ++c) sizes.push_back(k + 1);
  }
  return sizes;
}

}  // namespace eigpert::testing
