#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eigpert/eigenstructure.hpp"
#include "eigpert/matrix.hpp"

namespace eigpert {

/// m_g(C, lambda) >= m_g(A, lambda) - rank(B) at one eigenvalue of A.
struct GeometricDropCheck {
  GaussianRational lambda;
  std::size_t mg_a = 0;
  std::size_t mg_c = 0;
  bool satisfied = false;
};

/// Distinct-eigenvalue bounds for C = A + B.
struct BoundReport {
  std::size_t n = 0;
  std::size_t rank_b = 0;
  EigenstructureSummary summary_a;
  EigenstructureSummary summary_c;
  /// (rank(B) + 1)|Lambda(A)| + d(A)
  std::int64_t farrell_bound = 0;
  /// farrell_bound - d(C)
  std::int64_t improved_bound = 0;
  std::size_t actual_distinct_c = 0;
  /// improved_bound - actual_distinct_c
  std::int64_t slack = 0;
  /// |Lambda(C) ∩ Lambda(A)| and |Lambda(C) \ Lambda(A)|
  std::size_t s1_size = 0;
  std::size_t s2_size = 0;
  /// One entry per eigenvalue of A in Q(i).
  std::vector<GeometricDropCheck> mg_drop_checks;
  /// Sum of m_g(C, lambda) over Lambda(C) \ Lambda(A), from the invariant
  /// factors of C (no eigenvalues needed). At most
  /// |Lambda(A)| rank(B) + d(A) - d(C).
  std::size_t s2_geometric_total = 0;
};

/// Lists every proved relation the report fails (empty for a correct report):
/// the improved bound, |Lambda(C)| + d(C) <= n, the S1/S2 split, the
/// geometric-multiplicity drop, the bound identities, and the S1 = ∅ case.
std::vector<std::string> report_violations(const BoundReport& r);

/// Builds the report for C = A + B. Throws InputError on a dimension mismatch
/// and VerificationViolation if report_violations() is nonempty.
BoundReport bound_report(const ExactMatrix& a, const ExactMatrix& b);

struct DerogatoryCheck {
  std::size_t lhs = 0;  // I(C)
  std::int64_t rhs = 0;  // I(A) - rank(B)|Lambda(A)|
  bool holds = false;
};
/// I(C) >= I(A) - rank(B)|Lambda(A)|.
DerogatoryCheck derogatory_index_check(const BoundReport& report);

struct RankOneCheck {
  std::int64_t bound = 0;
  std::size_t actual = 0;
  bool c_diagonalizable = false;
  bool holds = false;
};
/// Needs d(A) = 0 and rank(B) = 1; throws InputError otherwise.
/// bound = 2|Lambda(A)| when C is diagonalizable, else 2|Lambda(A)| - 1.
RankOneCheck rank_one_check(const ExactMatrix& a, const ExactMatrix& b);
/// Same check on an existing report; the preconditions still apply.
RankOneCheck rank_one_check(const BoundReport& report);

struct NonderogatoryCheck {
  Rational lower;  // (n - d(A)) / (rank(B) + 1)
  std::size_t upper = 0;  // n - d(A)
  std::size_t value = 0;  // |Lambda(A)|
  bool holds = false;
};
/// Needs C = A + B nonderogatory; throws InputError reporting I(C) otherwise.
NonderogatoryCheck nonderogatory_check(const ExactMatrix& a, const ExactMatrix& b);
NonderogatoryCheck nonderogatory_check(const BoundReport& report);

struct HermitianSplit {
  ExactMatrix hermitian;  // (A + A*)/2
  ExactMatrix skew;       // (A - A*)/2
};
HermitianSplit hermitian_split(const ExactMatrix& a);

/// One point of the finite shift set that realises the infimum over alpha.
/// `alpha` is set when the shift is known exactly; otherwise it is
/// "-root of <factor>" (Hermitian side) or "root of <factor>" (skew side)
/// for a squarefree factor of multiplicity `multiplicity`.
struct AlphaCandidate {
  enum class Source { Zero, HermitianRoot, SkewRoot };
  Source source = Source::Zero;
  std::optional<GaussianRational> alpha;
  Poly factor;
  unsigned multiplicity = 0;
  std::size_t rank_h = 0;  // rank(H + alpha I)
  std::size_t rank_s = 0;  // rank(S - alpha I)
  std::int64_t min_value = 0;      // min{(rank_h+1)|Λ(S)|, (rank_s+1)|Λ(H)|} - d(A)
  std::int64_t product_value = 0;  // (rank_h+1)(rank_s+1) - d(A)

  std::string describe() const;
};

struct SplitReport {
  ExactMatrix h_part;
  ExactMatrix s_part;
  std::size_t rank_h = 0;
  std::size_t rank_s = 0;
  std::size_t distinct_h = 0;
  std::size_t distinct_s = 0;
  std::size_t distinct_a = 0;
  std::size_t defectivity_a = 0;
  /// min{(rank(H)+1)|Λ(S)|, (rank(S)+1)|Λ(H)|} - d(A)
  std::int64_t split_min_bound = 0;
  /// (rank(H)+1)(rank(S)+1) - d(A)
  std::int64_t split_product_bound = 0;
  /// split_min_bound minimised over H + alpha I, S - alpha I
  std::int64_t shifted_min_bound = 0;
  /// split_product_bound minimised the same way
  std::int64_t shifted_product_bound = 0;
  std::vector<AlphaCandidate> chosen_alpha_candidates;
};

/// Values of both shifted-split estimates at one concrete alpha, computed
/// directly from ranks and distinct counts of H + alpha I and S - alpha I.
struct ShiftedSplitValue {
  std::int64_t min_value = 0;
  std::int64_t product_value = 0;
};
ShiftedSplitValue shifted_split_value(const HermitianSplit& split, const GaussianRational& alpha,
                                      std::size_t defectivity_a);

/// Bounds on |Lambda(A)| from the Hermitian/skew-Hermitian splitting,
/// unshifted and minimised over the shift parameter. Throws
/// VerificationViolation if |Lambda(A)| exceeds any of them.
SplitReport split_bounds(const ExactMatrix& a);

/// deg q_M: exact upper bound on Krylov iterations.
std::size_t krylov_degree_bound(const ExactMatrix& m);

}  // namespace eigpert
