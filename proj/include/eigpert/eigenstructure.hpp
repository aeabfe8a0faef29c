#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eigpert/matrix.hpp"
#include "eigpert/poly.hpp"

namespace eigpert {

/// Diagonal of the Smith normal form of xI - M: n monic polynomials with
/// f_1 | f_2 | ... | f_n, trivial factors (= 1) included.
struct InvariantFactors {
  std::vector<Poly> factors;

  const Poly& minimal_polynomial() const { return factors.back(); }
  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

/// Every Jordan-structure count of a square matrix, derived without
/// computing eigenvalues.
struct EigenstructureSummary {
  std::size_t n = 0;
  Poly char_poly;
  Poly min_poly;
  InvariantFactors invariant_factors;
  /// |Lambda(M)|
  std::size_t num_distinct = 0;
  /// d(M) = sum over eigenvalues of (algebraic - geometric multiplicity)
  std::size_t defectivity = 0;
  /// I(M) = sum over eigenvalues of (geometric multiplicity - 1)
  std::size_t derogatory_index = 0;
  SquarefreeDecomposition multiplicity_profile;

  bool diagonalizable() const { return defectivity == 0; }
  bool nonderogatory() const { return derogatory_index == 0; }

  friend bool operator==(const EigenstructureSummary&, const EigenstructureSummary&) = default;
};

/// det(xI - M) by the Faddeev-LeVerrier recurrence.
Poly char_poly(const ExactMatrix& m);

/// Smith reduction of xI - M over Q(i)[x]. Pivot: nonzero entry of least
/// degree in the working block, ties to the smallest (row, col).
InvariantFactors invariant_factors(const ExactMatrix& m);

EigenstructureSummary summarize(const ExactMatrix& m);

/// n - rank(lambda I - M); 0 when lambda is not an eigenvalue.
std::size_t geometric_multiplicity_at(const ExactMatrix& m, const GaussianRational& lambda);

/// Largest k with (x - lambda)^k dividing the characteristic polynomial.
std::size_t algebraic_multiplicity_at(const ExactMatrix& m, const GaussianRational& lambda);
std::size_t algebraic_multiplicity_at(const Poly& char_poly, const GaussianRational& lambda);

/// |Lambda(A) ∩ Lambda(C)| as the degree of the gcd of the squarefree
/// characteristic polynomials.
std::size_t shared_spectrum_count(const ExactMatrix& a, const ExactMatrix& c);
std::size_t shared_spectrum_count(const EigenstructureSummary& a, const EigenstructureSummary& c);

/// Eigenvalues of M that lie in Q(i), sorted.
std::vector<GaussianRational> gaussian_rational_eigenvalues(const EigenstructureSummary& s);

/// Checks the summary's internal identities against M: divisibility chain,
/// product of invariant factors equals the characteristic polynomial,
/// f_n(M) = 0, |Lambda| + d + I = n, and equal distinct-root counts of the
/// minimal and characteristic polynomials. Returns one message per failure.
std::vector<std::string> consistency_issues(const ExactMatrix& m, const EigenstructureSummary& s);

}  // namespace eigpert
