#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eigpert/bounds.hpp"
#include "eigpert/errors.hpp"
#include "eigpert/eigenstructure.hpp"
#include "eigpert/matrix.hpp"

namespace eigpert {

/// SplitMix64 finaliser. Campaign streams are derived through it, so any
/// implementation that uses the same mixing and draws reproduces the same
/// matrices.
std::uint64_t mix64(std::uint64_t z);

/// SplitMix64 generator with a fully specified bounded draw.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t state) : state_(state) {}
  /// Stream for one trial of a campaign: state = mix64(seed ^ mix64(trial)).
  static RandomStream for_trial(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next();
  /// Uniform integer in [lo, hi] by rejection (no modulo bias).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

/// Jordan structure: each distinct eigenvalue with its block sizes.
struct JordanSpec {
  struct Eigen {
    GaussianRational value;
    std::vector<std::size_t> sizes;
  };
  std::vector<Eigen> blocks;

  /// Throws InputError for an empty spec, a zero block size, or a repeated
  /// eigenvalue.
  void validate() const;
  std::size_t dimension() const;
  std::string str() const;
};

/// Invariants read directly off a Jordan spec, independent of any matrix.
struct JordanTruth {
  std::size_t n = 0;
  std::size_t num_distinct = 0;
  std::size_t defectivity = 0;
  std::size_t derogatory_index = 0;
  Poly char_poly;
  Poly min_poly;
  InvariantFactors invariant_factors;
};
JordanTruth jordan_truth(const JordanSpec& spec);

/// Block-diagonal matrix of the spec's Jordan blocks in spec order.
ExactMatrix build_jordan(const JordanSpec& spec);

struct Unimodular {
  ExactMatrix matrix;
  ExactMatrix inverse;
};
/// `ops` random elementary row operations applied to I: add c*row j to
/// row i with c in [-3,3] \ {0}, or swap two rows. The inverse is built by
/// replaying the inverse operations as column operations.
Unimodular random_unimodular(std::size_t n, std::size_t ops, RandomStream& rng);

/// B = U V with integer U (n x r), V (r x n) drawn from [-bound, bound],
/// redrawn until rank(B) = r (at most 32 attempts, then std::runtime_error).
ExactMatrix random_low_rank(std::size_t n, std::size_t r, std::int64_t bound, RandomStream& rng);

/// Random Jordan spec of dimension n over the eigenvalue pool
/// {-4..4} ∪ {i, 1+i, -i}.
JordanSpec random_jordan_spec(std::size_t n, RandomStream& rng);

struct FuzzConfig {
  std::size_t n = 4;
  std::size_t rank = 1;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::int64_t max_entry = 3;
  /// Elementary operations in the conjugating matrix; defaults to 3n.
  std::optional<std::size_t> unimodular_ops;
  /// Replace every B draw by the zero matrix.
  bool zero_perturbation = false;
  /// Worker threads; 0 picks the hardware concurrency. Results never depend
  /// on this value.
  std::size_t threads = 0;

  /// Throws InputError unless 1 <= rank <= n, trials >= 1, max_entry >= 1.
  void validate() const;
  std::size_t ops() const { return unimodular_ops.value_or(3 * n); }
};

/// Everything one trial produced; also the unit of the reproduction bundle.
struct TrialOutcome {
  std::size_t trial = 0;
  JordanSpec spec;
  ExactMatrix a;
  ExactMatrix b;
  std::optional<BoundReport> report;
  std::vector<std::string> violations;
  bool nonderogatory_case = false;
};

/// Runs one trial of a campaign: draws the spec, A = P J P^-1 and B, then
/// checks every proved relation plus agreement of A's invariants with the
/// spec. Never throws for violations; they are collected in the outcome.
TrialOutcome run_trial(const FuzzConfig& config, std::size_t trial);

struct FuzzReport {
  std::size_t n = 0;
  std::size_t rank = 0;
  std::uint64_t seed = 0;
  std::size_t trials_run = 0;
  std::size_t violations = 0;
  /// Trials with |Λ(C)| equal to the improved bound.
  std::size_t tight_count = 0;
  std::map<std::int64_t, std::size_t> slack_histogram;
  std::int64_t min_slack = 0;
  std::int64_t max_slack = 0;
  /// Trials where d(C) >= 1, i.e. the improved bound is strictly smaller.
  std::size_t defective_c_count = 0;
  /// Trials where C was nonderogatory and the spectrum bracket was checked.
  std::size_t nonderogatory_count = 0;
  std::size_t mg_checks = 0;
  /// Not part of the JSON body.
  double elapsed_seconds = 0;
};

/// Merges campaign reports; the result does not depend on argument order
/// except for the n/rank/seed labels, which come from the first report.
FuzzReport merge(const std::vector<FuzzReport>& reports);

/// A failing trial, ready to be written to disk.
struct ReproductionBundle {
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  std::string reason;
  ExactMatrix a;
  ExactMatrix b;
};

class FuzzViolation : public VerificationViolation {
 public:
  explicit FuzzViolation(ReproductionBundle bundle);
  const ReproductionBundle& bundle() const { return bundle_; }

 private:
  ReproductionBundle bundle_;
};

/// Executes the campaign. Trials run in parallel; trial t always uses
/// RandomStream::for_trial(seed, t). Throws FuzzViolation for the
/// lowest-indexed failing trial.
FuzzReport run_fuzz(const FuzzConfig& config);

/// One row of the Jordan-block family: A = J_n(lambda0), B = B_r.
struct JordanFamilyRow {
  std::size_t r = 0;
  std::int64_t farrell = 0;
  std::int64_t improved = 0;
  std::size_t defectivity_c = 0;
  std::size_t actual = 0;
  bool ok = false;
};

struct ExampleSuiteResult {
  std::size_t n = 0;
  std::vector<JordanFamilyRow> family;
  /// The fixed 5x5 pair.
  BoundReport fixed_pair;
  bool fixed_pair_ok = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// n x n Jordan block with eigenvalue lambda0.
ExactMatrix jordan_block(std::size_t n, const GaussianRational& lambda0);
/// n x n matrix holding the r x (r+1) bidiagonal block with 1..r on the
/// diagonal and -1 above it in its top-left corner; rank r. Needs r < n.
ExactMatrix staircase_perturbation(std::size_t n, std::size_t r);
/// The fixed 5x5 pair: A with Jordan blocks 3,1,1 at eigenvalue 1, and B
/// with three all-ones rows.
ExactMatrix fixed_example_a();
ExactMatrix fixed_example_b();

/// Runs the Jordan-block family for r = 1..n-1 and the fixed 5x5 pair,
/// comparing against the closed forms farrell = n + r, improved = 2r + 1,
/// d(C_r) = n - 1 - r, and the fixed pair against |Λ(A)| = 1,
/// d(A) = 2, rank(B) = 1, d(C) = 1, |Λ(C)| = 3, farrell = 4, improved = 3.
ExampleSuiteResult worked_example_suite(std::size_t n, const GaussianRational& lambda0 = GaussianRational{});

}  // namespace eigpert
