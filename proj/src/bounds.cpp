#include "eigpert/bounds.hpp"

#include <algorithm>

#include "eigpert/errors.hpp"

namespace eigpert {

namespace {

std::int64_t as_signed(std::size_t v) { return static_cast<std::int64_t>(v); }

void require_same_square(const ExactMatrix& a, const ExactMatrix& b, const char* what) {
  require_square(a, what);
  require_square(b, what);
  if (a.rows() != b.rows())
    throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(a.rows()) + " vs " +
                     std::to_string(b.rows()) + ")");
}

// Number of distinct roots of f that are not roots of `avoid`.
std::size_t roots_outside(const Poly& f, const Poly& avoid_squarefree) {
  if (f.degree() <= 0) return 0;
  Poly sq = squarefree_decompose(f).squarefree_part();
  Poly shared = poly_gcd(sq, avoid_squarefree);
  return static_cast<std::size_t>(sq.degree() - shared.degree());
}

}  // namespace

std::vector<std::string> report_violations(const BoundReport& r) {
  std::vector<std::string> out;
  const auto& a = r.summary_a;
  const auto& c = r.summary_c;
  const std::int64_t farrell = as_signed((r.rank_b + 1) * a.num_distinct + a.defectivity);
  const std::int64_t n = as_signed(r.n);
  const std::int64_t actual = as_signed(r.actual_distinct_c);

  if (r.farrell_bound != farrell) out.push_back("farrell_bound differs from (rank(B)+1)|Λ(A)| + d(A)");
  if (r.improved_bound != r.farrell_bound - as_signed(c.defectivity))
    out.push_back("improved_bound differs from farrell_bound - d(C)");
  if (r.actual_distinct_c != c.num_distinct) out.push_back("actual_distinct_c differs from |Λ(C)|");
  if (r.slack != r.improved_bound - actual) out.push_back("slack differs from improved_bound - |Λ(C)|");
  if (actual > r.improved_bound)
    out.push_back("|Λ(C)| = " + std::to_string(actual) + " exceeds the improved bound " +
                  std::to_string(r.improved_bound));
  if (r.improved_bound > r.farrell_bound) out.push_back("improved bound exceeds farrell bound");
  if ((r.improved_bound == r.farrell_bound) != (c.defectivity == 0))
    out.push_back("improved bound equals farrell bound but d(C) != 0, or the converse");
  if (actual + as_signed(c.defectivity) > n) out.push_back("|Λ(C)| + d(C) exceeds n");
  if (r.s1_size + r.s2_size != r.actual_distinct_c) out.push_back("|S1| + |S2| differs from |Λ(C)|");
  if (r.s1_size > a.num_distinct) out.push_back("|S1| exceeds |Λ(A)|");
  if (r.s2_size > r.s2_geometric_total) out.push_back("|S2| exceeds the geometric total over S2");
  if (as_signed(r.s2_geometric_total) >
      as_signed(a.num_distinct * r.rank_b + a.defectivity) - as_signed(c.defectivity))
    out.push_back("geometric total over S2 exceeds |Λ(A)| rank(B) + d(A) - d(C)");
  if (r.s1_size == 0 && farrell <= n) out.push_back("S1 is empty but (rank(B)+1)|Λ(A)| + d(A) <= n");
  for (const auto& chk : r.mg_drop_checks) {
    if (!chk.satisfied || chk.mg_c + r.rank_b < chk.mg_a)
      out.push_back("m_g(C, " + chk.lambda.str() + ") = " + std::to_string(chk.mg_c) + " < m_g(A, " +
                    chk.lambda.str() + ") - rank(B) = " + std::to_string(chk.mg_a) + " - " +
                    std::to_string(r.rank_b));
  }
  return out;
}

BoundReport bound_report(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_square(a, b, "bound_report");
  const ExactMatrix c = a + b;

  BoundReport r;
  r.n = a.rows();
  r.rank_b = rank(b);
  r.summary_a = summarize(a);
  r.summary_c = summarize(c);
  const auto& sa = r.summary_a;
  const auto& sc = r.summary_c;

  r.farrell_bound = as_signed((r.rank_b + 1) * sa.num_distinct + sa.defectivity);
  r.improved_bound = r.farrell_bound - as_signed(sc.defectivity);
  r.actual_distinct_c = sc.num_distinct;
  r.slack = r.improved_bound - as_signed(r.actual_distinct_c);

  // S1 from the gcd of the squarefree parts; S2 separately from the part of
  // char(C) coprime to char(A), so their sum is a genuine cross-check.
  const Poly sq_a = sa.multiplicity_profile.squarefree_part();
  r.s1_size = shared_spectrum_count(sa, sc);
  r.s2_size = roots_outside(sc.char_poly, sq_a);
  for (const auto& f : sc.invariant_factors.factors) r.s2_geometric_total += roots_outside(f, sq_a);

  for (const auto& lambda : gaussian_rational_eigenvalues(sa)) {
    GeometricDropCheck chk;
    chk.lambda = lambda;
    chk.mg_a = geometric_multiplicity_at(a, lambda);
    chk.mg_c = geometric_multiplicity_at(c, lambda);
    chk.satisfied = chk.mg_c + r.rank_b >= chk.mg_a;
    r.mg_drop_checks.push_back(std::move(chk));
  }

  if (auto v = report_violations(r); !v.empty()) {
    std::string msg = "bound report failed a proved relation:";
    for (const auto& line : v) msg += "\n  " + line;
    throw VerificationViolation(msg);
  }
  return r;
}

DerogatoryCheck derogatory_index_check(const BoundReport& report) {
  DerogatoryCheck out;
  out.lhs = report.summary_c.derogatory_index;
  out.rhs = as_signed(report.summary_a.derogatory_index) - as_signed(report.rank_b * report.summary_a.num_distinct);
  out.holds = as_signed(out.lhs) >= out.rhs;
  return out;
}

RankOneCheck rank_one_check(const BoundReport& report) {
  if (report.summary_a.defectivity != 0)
    throw InputError("rank-one check needs A diagonalizable, but d(A) = " +
                     std::to_string(report.summary_a.defectivity));
  if (report.rank_b != 1)
    throw InputError("rank-one check needs rank(B) = 1, but rank(B) = " + std::to_string(report.rank_b));
  RankOneCheck out;
  out.c_diagonalizable = report.summary_c.diagonalizable();
  out.bound = 2 * as_signed(report.summary_a.num_distinct) - (out.c_diagonalizable ? 0 : 1);
  out.actual = report.actual_distinct_c;
  out.holds = as_signed(out.actual) <= out.bound;
  return out;
}

RankOneCheck rank_one_check(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_square(a, b, "rank_one_check");
  // Cheap hypothesis checks first so a bad call fails before the full report.
  if (const auto rb = rank(b); rb != 1)
    throw InputError("rank-one check needs rank(B) = 1, but rank(B) = " + std::to_string(rb));
  if (const auto d = summarize(a).defectivity; d != 0)
    throw InputError("rank-one check needs A diagonalizable, but d(A) = " + std::to_string(d));
  return rank_one_check(bound_report(a, b));
}

NonderogatoryCheck nonderogatory_check(const BoundReport& report) {
  if (!report.summary_c.nonderogatory())
    throw InputError("nonderogatory check needs I(C) = 0, but I(C) = " +
                     std::to_string(report.summary_c.derogatory_index));
  NonderogatoryCheck out;
  const std::size_t spread = report.n - report.summary_a.defectivity;
  out.lower = Rational(static_cast<unsigned long>(spread), static_cast<unsigned long>(report.rank_b + 1));
  out.lower.canonicalize();
  out.upper = spread;
  out.value = report.summary_a.num_distinct;
  out.holds = out.lower <= static_cast<unsigned long>(out.value) && out.value <= out.upper;
  return out;
}

NonderogatoryCheck nonderogatory_check(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_square(a, b, "nonderogatory_check");
  return nonderogatory_check(bound_report(a, b));
}

HermitianSplit hermitian_split(const ExactMatrix& a) {
  require_square(a, "hermitian_split");
  const ExactMatrix adj = a.conjugate_transpose();
  const GaussianRational half(Rational(1, 2));
  HermitianSplit s{(a + adj) * half, (a - adj) * half};
  if (s.hermitian + s.skew != a || s.hermitian.conjugate_transpose() != s.hermitian ||
      s.skew.conjugate_transpose() != s.skew * GaussianRational(-1))
    throw VerificationViolation("Hermitian/skew-Hermitian split is inconsistent");
  return s;
}

std::string AlphaCandidate::describe() const {
  if (alpha) return alpha->str();
  switch (source) {
    case Source::Zero:
      return "0";
    case Source::HermitianRoot:
      return "-(nonzero root of " + factor.str() + ")";
    case Source::SkewRoot:
      return "nonzero root of " + factor.str();
  }
  return {};
}

ShiftedSplitValue shifted_split_value(const HermitianSplit& split, const GaussianRational& alpha,
                                      std::size_t defectivity_a) {
  const std::size_t n = split.hermitian.rows();
  const ExactMatrix h = split.hermitian + ExactMatrix::scalar(n, alpha);
  const ExactMatrix s = split.skew - ExactMatrix::scalar(n, alpha);
  const auto rank_h = as_signed(rank(h));
  const auto rank_s = as_signed(rank(s));
  const auto distinct_h = as_signed(distinct_root_count(char_poly(h)));
  const auto distinct_s = as_signed(distinct_root_count(char_poly(s)));
  const auto d = as_signed(defectivity_a);
  return {std::min((rank_h + 1) * distinct_s, (rank_s + 1) * distinct_h) - d, (rank_h + 1) * (rank_s + 1) - d};
}

namespace {

// The only nonzero root of g when there is exactly one, else nullopt.
std::optional<GaussianRational> sole_nonzero_root(const Poly& g) {
  if (g.degree() == 1) return -g.coeff(0) / g.coeff(1);
  if (g.degree() == 2 && g.coeff(0).is_zero()) return -g.coeff(1) / g.coeff(2);
  return std::nullopt;
}

}  // namespace

SplitReport split_bounds(const ExactMatrix& a) {
  require_square(a, "split_bounds");
  const std::size_t n = a.rows();
  HermitianSplit split = hermitian_split(a);
  const EigenstructureSummary sa = summarize(a);

  SplitReport r;
  r.distinct_a = sa.num_distinct;
  r.defectivity_a = sa.defectivity;
  r.rank_h = rank(split.hermitian);
  r.rank_s = rank(split.skew);
  const SquarefreeDecomposition prof_h = squarefree_decompose(char_poly(split.hermitian));
  const SquarefreeDecomposition prof_s = squarefree_decompose(char_poly(split.skew));
  r.distinct_h = static_cast<std::size_t>(prof_h.squarefree_part().degree());
  r.distinct_s = static_cast<std::size_t>(prof_s.squarefree_part().degree());

  const std::int64_t d = as_signed(r.defectivity_a);
  const std::int64_t dh = as_signed(r.distinct_h);
  const std::int64_t ds = as_signed(r.distinct_s);
  auto min_value = [&](std::size_t rh, std::size_t rs) {
    return std::min((as_signed(rh) + 1) * ds, (as_signed(rs) + 1) * dh) - d;
  };
  auto product_value = [&](std::size_t rh, std::size_t rs) {
    return (as_signed(rh) + 1) * (as_signed(rs) + 1) - d;
  };
  r.split_min_bound = min_value(r.rank_h, r.rank_s);
  r.split_product_bound = product_value(r.rank_h, r.rank_s);

  // Spectra shift rigidly with alpha, so only the ranks move. rank(H + aI)
  // drops below n only at a = -lambda for lambda in Λ(H), where it equals
  // n - m_a(H, lambda) since H is normal; likewise rank(S - aI) at
  // a = lambda in Λ(S). Both drop together only at a = 0.
  AlphaCandidate zero;
  zero.alpha = GaussianRational{};
  zero.rank_h = r.rank_h;
  zero.rank_s = r.rank_s;
  r.chosen_alpha_candidates.push_back(zero);

  auto add_class = [&](AlphaCandidate::Source source, const SquarefreeDecomposition::Part& part) {
    const int nonzero_roots = part.factor.degree() - (part.factor.coeff(0).is_zero() ? 1 : 0);
    if (nonzero_roots <= 0) return;
    AlphaCandidate cand;
    cand.source = source;
    cand.factor = part.factor;
    cand.multiplicity = part.multiplicity;
    if (auto root = sole_nonzero_root(part.factor))
      cand.alpha = source == AlphaCandidate::Source::HermitianRoot ? -*root : *root;
    const std::size_t dropped = n - part.multiplicity;
    cand.rank_h = source == AlphaCandidate::Source::HermitianRoot ? dropped : n;
    cand.rank_s = source == AlphaCandidate::Source::SkewRoot ? dropped : n;
    r.chosen_alpha_candidates.push_back(std::move(cand));
  };
  for (const auto& part : prof_h.parts) add_class(AlphaCandidate::Source::HermitianRoot, part);
  for (const auto& part : prof_s.parts) add_class(AlphaCandidate::Source::SkewRoot, part);

  r.shifted_min_bound = r.split_min_bound;
  r.shifted_product_bound = r.split_product_bound;
  for (auto& cand : r.chosen_alpha_candidates) {
    cand.min_value = min_value(cand.rank_h, cand.rank_s);
    cand.product_value = product_value(cand.rank_h, cand.rank_s);
    r.shifted_min_bound = std::min(r.shifted_min_bound, cand.min_value);
    r.shifted_product_bound = std::min(r.shifted_product_bound, cand.product_value);
  }
  r.h_part = std::move(split.hermitian);
  r.s_part = std::move(split.skew);

  const std::int64_t lhs = as_signed(r.distinct_a);
  if (lhs > r.shifted_min_bound || r.shifted_min_bound > r.split_min_bound ||
      r.split_min_bound > r.split_product_bound || lhs > r.shifted_product_bound ||
      r.shifted_product_bound > r.split_product_bound || r.distinct_h > r.rank_h + 1 || r.distinct_s > r.rank_s + 1)
    throw VerificationViolation("splitting bounds out of order: |Λ(A)| = " + std::to_string(lhs) +
                                ", shifted min " + std::to_string(r.shifted_min_bound) + ", split min " +
                                std::to_string(r.split_min_bound) + ", shifted product " +
                                std::to_string(r.shifted_product_bound) + ", split product " +
                                std::to_string(r.split_product_bound));
  return r;
}

std::size_t krylov_degree_bound(const ExactMatrix& m) {
  require_square(m, "krylov_degree_bound");
  return static_cast<std::size_t>(invariant_factors(m).minimal_polynomial().degree());
}

}  // namespace eigpert
