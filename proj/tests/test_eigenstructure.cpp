#include <gtest/gtest.h>

#include <algorithm>

#include "eigpert/eigenstructure.hpp"
#include "eigpert/errors.hpp"
#include "eigpert/fuzz.hpp"
#include "support.hpp"

namespace eigpert {
namespace {

using testing::companion;
using testing::from_roots;
using testing::gi;

const Poly kQuad({3, -5, 1});  // x^2 - 5x + 3

ExactMatrix fixed_c() { return fixed_example_a() + fixed_example_b(); }

// char_poly agrees with det(tI - M) at deg + 1 points.
void expect_char_poly_matches_det(const ExactMatrix& m) {
  const Poly p = char_poly(m);
  ASSERT_EQ(p.degree(), static_cast<int>(m.rows()));
  for (long t = -1; t <= static_cast<long>(m.rows()); ++t)
    EXPECT_EQ(p(gi(t, t % 2)), testing::det_shift(m, gi(t, t % 2)));
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(jordan_block(4, 2)), pow(Poly::linear(2), 4));
  EXPECT_EQ(char_poly(ExactMatrix::identity(3)), pow(Poly::linear(1), 3));
  EXPECT_EQ(char_poly(fixed_c()), pow(Poly::linear(1), 3) * kQuad);
  expect_char_poly_matches_det(fixed_c());
}

TEST(CharPoly, AgreesWithDeterminant) {
  RandomStream rng(31);
  for (int k = 0; k < 40; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    expect_char_poly_matches_det(testing::random_matrix(n, n, rng, 5, 4));
  }
}

TEST(InvariantFactors, FixedPairA) {
  // Blocks 3, 1, 1 at eigenvalue 1.
  const auto f = invariant_factors(fixed_example_a());
  const Poly one = Poly::constant(1);
  const Poly l = Poly::linear(1);
  EXPECT_EQ(f.factors, (std::vector<Poly>{one, one, l, l, pow(l, 3)}));
  EXPECT_EQ(f.minimal_polynomial(), pow(l, 3));
}

TEST(InvariantFactors, FixedPairC) {
  const auto f = invariant_factors(fixed_c());
  const Poly one = Poly::constant(1);
  const Poly l = Poly::linear(1);
  EXPECT_EQ(f.factors, (std::vector<Poly>{one, one, one, l, pow(l, 2) * kQuad}));
  // The rank-sequence oracle agrees: blocks 2 and 1 at eigenvalue 1.
  EXPECT_EQ(testing::block_sizes_by_rank(fixed_c(), 1), (std::vector<std::size_t>{1, 2}));
}

TEST(InvariantFactors, Scalar) {
  const auto f = invariant_factors(ExactMatrix::scalar(4, gi(2, -1)));
  for (const auto& p : f.factors) EXPECT_EQ(p, Poly::linear(gi(2, -1)));
}

TEST(InvariantFactors, MatchesJordanTruthUnderConjugation) {
  RandomStream rng(32);
  for (int k = 0; k < 40; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 7));
    const JordanSpec spec = random_jordan_spec(n, rng);
    const Unimodular p = random_unimodular(n, 3 * n, rng);
    const ExactMatrix m = p.matrix * build_jordan(spec) * p.inverse;
    const JordanTruth truth = jordan_truth(spec);
    EXPECT_EQ(invariant_factors(m), truth.invariant_factors) << spec.str();
    for (const auto& e : spec.blocks) {
      auto sizes = e.sizes;
      std::sort(sizes.begin(), sizes.end());
      EXPECT_EQ(testing::block_sizes_by_rank(m, e.value), sizes) << spec.str();
    }
  }
}

TEST(Summarize, FixedPair) {
  const auto a = summarize(fixed_example_a());
  EXPECT_EQ(a.num_distinct, 1u);
  EXPECT_EQ(a.defectivity, 2u);
  EXPECT_EQ(a.derogatory_index, 2u);
  const auto c = summarize(fixed_c());
  EXPECT_EQ(c.num_distinct, 3u);
  EXPECT_EQ(c.defectivity, 1u);
  EXPECT_EQ(c.derogatory_index, 1u);
  EXPECT_EQ(c.min_poly, pow(Poly::linear(1), 2) * kQuad);
}

TEST(Summarize, JordanBlock) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto s = summarize(jordan_block(n, gi(1, 1)));
    EXPECT_EQ(s.num_distinct, 1u);
    EXPECT_EQ(s.defectivity, n - 1);
    EXPECT_EQ(s.derogatory_index, 0u);
    EXPECT_TRUE(s.nonderogatory());
    EXPECT_EQ(s.diagonalizable(), n == 1);
  }
}

TEST(Summarize, ScalarIsMaximallyDerogatory) {
  RandomStream rng(33);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto s = summarize(ExactMatrix::scalar(n, testing::random_gaussian(rng, 20, 7)));
    EXPECT_EQ(s.derogatory_index, n - 1);
    EXPECT_EQ(s.defectivity, 0u);
    EXPECT_EQ(s.num_distinct, 1u);
  }
}

TEST(Summarize, CompanionIsNonderogatory) {
  RandomStream rng(34);
  for (int k = 0; k < 30; ++k) {
    const auto n = static_cast<int>(rng.uniform(1, 6));
    std::vector<GaussianRational> c;
    for (int j = 0; j < n; ++j) c.push_back(testing::random_gaussian(rng, 3, 2));
    c.push_back(1);
    const Poly p(c);
    const auto s = summarize(companion(p));
    EXPECT_EQ(s.derogatory_index, 0u);
    EXPECT_EQ(s.char_poly, p);
    EXPECT_EQ(s.min_poly, p);
  }
  // A repeated root gives one block: (x - 2)^3 has companion J_3(2) up to similarity.
  const auto s = summarize(companion(pow(Poly::linear(2), 3)));
  EXPECT_EQ(s.defectivity, 2u);
  EXPECT_EQ(s.derogatory_index, 0u);
}

TEST(Multiplicities, Examples) {
  EXPECT_EQ(geometric_multiplicity_at(fixed_example_a(), 1), 3u);
  EXPECT_EQ(geometric_multiplicity_at(fixed_example_a(), 2), 0u);
  EXPECT_EQ(algebraic_multiplicity_at(fixed_c(), 1), 3u);
  EXPECT_EQ(algebraic_multiplicity_at(fixed_c(), 0), 0u);
  EXPECT_EQ(geometric_multiplicity_at(fixed_c(), 1), 2u);
}

TEST(Multiplicities, GeometricAtMostAlgebraic) {
  RandomStream rng(35);
  for (int k = 0; k < 30; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 7));
    const JordanSpec spec = random_jordan_spec(n, rng);
    const ExactMatrix m = build_jordan(spec);
    for (const auto& e : spec.blocks) {
      const std::size_t mg = geometric_multiplicity_at(m, e.value);
      EXPECT_EQ(mg, e.sizes.size());
      EXPECT_LE(mg, algebraic_multiplicity_at(m, e.value));
    }
  }
}

TEST(SharedSpectrum, Examples) {
  EXPECT_EQ(shared_spectrum_count(fixed_example_a(), fixed_c()), 1u);
  EXPECT_EQ(shared_spectrum_count(fixed_c(), fixed_c()), 3u);
  EXPECT_EQ(shared_spectrum_count(ExactMatrix::diagonal({1, 2}), ExactMatrix::diagonal({3, gi(0, 1)})), 0u);
}

TEST(Eigenvalues, RationalOnly) {
  EXPECT_EQ(gaussian_rational_eigenvalues(summarize(fixed_c())), std::vector<GaussianRational>{1});
  EXPECT_EQ(gaussian_rational_eigenvalues(summarize(ExactMatrix::diagonal({gi(0, 1), -3, gi(0, 1)}))),
            (std::vector<GaussianRational>{-3, gi(0, 1)}));
}

TEST(Summarize, SimilarityInvariant) {
  RandomStream rng(36);
  for (int k = 0; k < 25; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 6));
    const ExactMatrix m = testing::random_matrix(n, n, rng, 2, 1);
    const Unimodular p = random_unimodular(n, 2 * n, rng);
    const auto s = summarize(m);
    const auto t = summarize(p.matrix * m * p.inverse);
    EXPECT_EQ(s.char_poly, t.char_poly);
    EXPECT_EQ(s.invariant_factors, t.invariant_factors);
    EXPECT_EQ(s.num_distinct + s.defectivity + s.derogatory_index, n);
    EXPECT_TRUE(consistency_issues(m, s).empty());
  }
}

TEST(Consistency, DetectsTamperedSummary) {
  auto s = summarize(fixed_c());
  EXPECT_TRUE(consistency_issues(fixed_c(), s).empty());
  s.defectivity += 1;
  EXPECT_FALSE(consistency_issues(fixed_c(), s).empty());
  s = summarize(fixed_c());
  s.invariant_factors.factors[3] = Poly::linear(2);
  EXPECT_FALSE(consistency_issues(fixed_c(), s).empty());
}

TEST(Errors, NonSquareRejected) {
  EXPECT_THROW(char_poly(ExactMatrix(2, 3)), InputError);
  EXPECT_THROW(invariant_factors(ExactMatrix(3, 2)), InputError);
  EXPECT_THROW(summarize(ExactMatrix(1, 2)), InputError);
}

}  // namespace
}  // namespace eigpert
