#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "eigpert/gaussian_rational.hpp"

namespace eigpert {

/// Univariate polynomial over the Gaussian rationals, coefficients stored
/// lowest degree first. The zero polynomial is the empty coefficient vector;
/// every other value has a nonzero leading coefficient.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<GaussianRational> coeffs);
  explicit Poly(std::vector<GaussianRational> coeffs);

  static Poly constant(GaussianRational c);
  static Poly x();
  /// x - root
  static Poly linear(const GaussianRational& root);
  /// c * x^k
  static Poly monomial(GaussianRational c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^k (zero beyond the degree).
  GaussianRational coeff(std::size_t k) const;
  /// Throws InputError for the zero polynomial.
  const GaussianRational& leading() const;
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }

  /// Scaled to leading coefficient 1; zero stays zero.
  Poly monic() const;
  Poly derivative() const;
  GaussianRational operator()(const GaussianRational& at) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const GaussianRational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GaussianRational& c) { return a *= c; }
  friend Poly operator*(const GaussianRational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string str() const;

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// p^k by repeated squaring.
Poly pow(const Poly& p, unsigned k);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// a = b*quotient + remainder with deg remainder < deg b. Throws InputError
/// when b is zero.
DivMod poly_divmod(const Poly& a, const Poly& b);

/// True when b divides a exactly (b nonzero).
bool divides(const Poly& b, const Poly& a);

/// Exact quotient a / b; throws VerificationViolation if the remainder is
/// nonzero.
Poly exact_quotient(const Poly& a, const Poly& b);

/// Monic gcd. Throws InputError when both arguments are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

/// unit * prod(part.factor ^ part.multiplicity) with monic, squarefree,
/// pairwise coprime, nonconstant factors and strictly increasing
/// multiplicities.
struct SquarefreeDecomposition {
  struct Part {
    Poly factor;
    unsigned multiplicity = 0;
    friend bool operator==(const Part&, const Part&) = default;
  };
  GaussianRational unit;
  std::vector<Part> parts;

  /// Product of the factors, i.e. the monic squarefree part of the input.
  Poly squarefree_part() const;
  /// Multiplies the decomposition back out.
  Poly expand() const;

  friend bool operator==(const SquarefreeDecomposition&, const SquarefreeDecomposition&) = default;
};

/// Yun's algorithm. Throws InputError for the zero polynomial.
SquarefreeDecomposition squarefree_decompose(const Poly& p);

/// Degree of the squarefree part, i.e. the number of distinct complex roots.
std::size_t distinct_root_count(const Poly& p);

/// All roots of p that lie in Q(i), sorted. Candidates come from a
/// floating-point simultaneous iteration on the squarefree part; every
/// returned root is confirmed by exact evaluation, so the result never
/// contains a non-root.
std::vector<GaussianRational> gaussian_rational_roots(const Poly& p);

}  // namespace eigpert
