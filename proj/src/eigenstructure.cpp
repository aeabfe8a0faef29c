#include "eigpert/eigenstructure.hpp"

#include <utility>
#include <vector>

#include "eigpert/errors.hpp"

namespace eigpert {

namespace {

// Gaussian integer with mpz parts, used by the fraction-free recurrence.
struct GaussInt {
  mpz_class re;
  mpz_class im;
};

}  // namespace

Poly char_poly(const ExactMatrix& m) {
  require_square(m, "char_poly");
  const std::size_t n = m.rows();
  // Work on N = L*M with Gaussian-integer entries; every division below is exact.
  mpz_class l = 1;
  for (const auto& e : m.entries()) l = lcm(l, common_denominator(e));
  std::vector<GaussInt> a(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    const auto& e = m.entries()[k];
    a[k].re = e.re().get_num() * (l / e.re().get_den());
    a[k].im = e.im().get_num() * (l / e.im().get_den());
  }

  // M_1 = I; c_{n-k} = -tr(N M_k)/k; M_{k+1} = N M_k + c_{n-k} I.
  std::vector<GaussInt> c(n + 1);
  c[n].re = 1;
  std::vector<GaussInt> mk(n * n);
  for (std::size_t i = 0; i < n; ++i) mk[i * n + i].re = 1;
  std::vector<GaussInt> prod(n * n);
  mpz_class t;
  for (std::size_t k = 1; k <= n; ++k) {
    for (auto& p : prod) p.re = p.im = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const GaussInt& x = a[i * n + j];
        if (sgn(x.re) == 0 && sgn(x.im) == 0) continue;
        for (std::size_t col = 0; col < n; ++col) {
          const GaussInt& y = mk[j * n + col];
          GaussInt& z = prod[i * n + col];
          t = x.re * y.re;
          z.re += t;
          t = x.im * y.im;
          z.re -= t;
          t = x.re * y.im;
          z.im += t;
          t = x.im * y.re;
          z.im += t;
        }
      }
    GaussInt& ck = c[n - k];
    for (std::size_t i = 0; i < n; ++i) {
      ck.re -= prod[i * n + i].re;
      ck.im -= prod[i * n + i].im;
    }
    mpz_divexact_ui(ck.re.get_mpz_t(), ck.re.get_mpz_t(), k);
    mpz_divexact_ui(ck.im.get_mpz_t(), ck.im.get_mpz_t(), k);
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) {
      prod[i * n + i].re += ck.re;
      prod[i * n + i].im += ck.im;
    }
    std::swap(mk, prod);
  }

  // det(xI - M) = L^{-n} det(LxI - N): coefficient j picks up L^{j-n}.
  std::vector<GaussianRational> coeffs(n + 1);
  mpz_class scale = 1;
  for (std::size_t j = n + 1; j-- > 0;) {
    coeffs[j] = GaussianRational(Rational(c[j].re, scale), Rational(c[j].im, scale));
    scale *= l;
  }
  return Poly(std::move(coeffs));
}

namespace {

class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t n) : n_(n), cells_(n * n) {}
  Poly& at(std::size_t r, std::size_t c) { return cells_[r * n_ + c]; }
  std::size_t size() const { return n_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < n_; ++c) std::swap(at(a, c), at(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < n_; ++r) std::swap(at(r, a), at(r, b));
  }

 private:
  std::size_t n_;
  std::vector<Poly> cells_;
};

}  // namespace

InvariantFactors invariant_factors(const ExactMatrix& m) {
  require_square(m, "invariant_factors");
  const std::size_t n = m.rows();
  PolyMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a.at(r, c) = r == c ? Poly{-m(r, c), 1} : Poly::constant(-m(r, c));

  InvariantFactors out;
  out.factors.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      std::size_t pr = n;
      std::size_t pc = n;
      int best = -1;
      for (std::size_t r = k; r < n; ++r)
        for (std::size_t c = k; c < n; ++c) {
          const int d = a.at(r, c).degree();
          if (d >= 0 && (best < 0 || d < best)) {
            best = d;
            pr = r;
            pc = c;
          }
        }
      if (pr == n) throw VerificationViolation("xI - M reduced to a singular block; Smith reduction is broken");
      a.swap_rows(k, pr);
      a.swap_cols(k, pc);

      if (!a.at(k, k).leading().is_one()) {
        GaussianRational inv = GaussianRational(1) / a.at(k, k).leading();
        for (std::size_t c = k; c < n; ++c) a.at(k, c) *= inv;
      }
      const Poly& pivot = a.at(k, k);
      const bool unit_pivot = pivot.degree() == 0;

      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a.at(i, k).is_zero()) continue;
        auto [q, r] = poly_divmod(a.at(i, k), pivot);
        for (std::size_t j = k + 1; j < n; ++j)
          if (!a.at(k, j).is_zero()) a.at(i, j) -= q * a.at(k, j);
        if (!r.is_zero()) clean = false;
        a.at(i, k) = std::move(r);
      }
      if (!clean) continue;

      // Column k below the pivot is zero now, so clearing row k only
      // touches row k itself.
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a.at(k, j).is_zero()) continue;
        auto r = poly_divmod(a.at(k, j), pivot).remainder;
        if (!r.is_zero()) clean = false;
        a.at(k, j) = std::move(r);
      }
      if (!clean) continue;

      bool fixed = true;
      if (!unit_pivot) {
        for (std::size_t i = k + 1; i < n && fixed; ++i)
          for (std::size_t j = k + 1; j < n; ++j) {
            if (!a.at(i, j).is_zero() && !divides(pivot, a.at(i, j))) {
              for (std::size_t c = k + 1; c < n; ++c) a.at(k, c) += a.at(i, c);
              fixed = false;
              break;
            }
          }
      }
      if (fixed) break;
    }
    out.factors.push_back(a.at(k, k));
  }
  return out;
}

EigenstructureSummary summarize(const ExactMatrix& m) {
  require_square(m, "summarize");
  EigenstructureSummary s;
  s.n = m.rows();
  s.char_poly = char_poly(m);
  s.invariant_factors = invariant_factors(m);
  s.min_poly = s.invariant_factors.minimal_polynomial();
  s.num_distinct = distinct_root_count(s.min_poly);
  // Each invariant factor contributes one Jordan block per distinct root,
  // so the sum of the squarefree degrees is the total geometric multiplicity.
  std::size_t blocks = 0;
  for (const auto& f : s.invariant_factors.factors) blocks += distinct_root_count(f);
  s.defectivity = s.n - blocks;
  s.derogatory_index = s.n - s.defectivity - s.num_distinct;
  s.multiplicity_profile = squarefree_decompose(s.char_poly);
  return s;
}

std::size_t geometric_multiplicity_at(const ExactMatrix& m, const GaussianRational& lambda) {
  require_square(m, "geometric_multiplicity_at");
  ExactMatrix shifted = ExactMatrix::scalar(m.rows(), lambda) - m;
  return m.rows() - rank(shifted);
}

std::size_t algebraic_multiplicity_at(const Poly& cp, const GaussianRational& lambda) {
  const Poly linear = Poly::linear(lambda);
  Poly rest = cp;
  std::size_t k = 0;
  while (rest.degree() > 0) {
    auto [q, r] = poly_divmod(rest, linear);
    if (!r.is_zero()) break;
    rest = std::move(q);
    ++k;
  }
  return k;
}

std::size_t algebraic_multiplicity_at(const ExactMatrix& m, const GaussianRational& lambda) {
  require_square(m, "algebraic_multiplicity_at");
  return algebraic_multiplicity_at(char_poly(m), lambda);
}

std::size_t shared_spectrum_count(const EigenstructureSummary& a, const EigenstructureSummary& c) {
  if (a.n != c.n) throw InputError("shared_spectrum_count: dimension mismatch");
  return static_cast<std::size_t>(
      poly_gcd(a.multiplicity_profile.squarefree_part(), c.multiplicity_profile.squarefree_part()).degree());
}

std::size_t shared_spectrum_count(const ExactMatrix& a, const ExactMatrix& c) {
  require_square(a, "shared_spectrum_count");
  require_square(c, "shared_spectrum_count");
  if (a.rows() != c.rows()) throw InputError("shared_spectrum_count: dimension mismatch");
  Poly fa = squarefree_decompose(char_poly(a)).squarefree_part();
  Poly fc = squarefree_decompose(char_poly(c)).squarefree_part();
  return static_cast<std::size_t>(poly_gcd(fa, fc).degree());
}

std::vector<GaussianRational> gaussian_rational_eigenvalues(const EigenstructureSummary& s) {
  return gaussian_rational_roots(s.char_poly);
}

std::vector<std::string> consistency_issues(const ExactMatrix& m, const EigenstructureSummary& s) {
  std::vector<std::string> issues;
  const auto& f = s.invariant_factors.factors;
  if (f.size() != s.n) issues.push_back("invariant factor count differs from n");
  for (std::size_t i = 0; i + 1 < f.size(); ++i)
    if (!divides(f[i], f[i + 1])) issues.push_back("f_" + std::to_string(i + 1) + " does not divide the next factor");
  Poly product = Poly::constant(1);
  for (const auto& p : f) product *= p;
  if (product.monic() != s.char_poly.monic()) issues.push_back("product of invariant factors differs from char poly");
  if (!f.empty() && !evaluate(f.back(), m).is_zero()) issues.push_back("f_n(M) is not the zero matrix");
  if (s.num_distinct + s.defectivity + s.derogatory_index != s.n) issues.push_back("|Lambda| + d + I differs from n");
  if (distinct_root_count(s.min_poly) != distinct_root_count(s.char_poly))
    issues.push_back("min poly and char poly have different distinct-root counts");
  if (s.multiplicity_profile.expand() != s.char_poly) issues.push_back("multiplicity profile does not expand to char poly");
  return issues;
}

}  // namespace eigpert
