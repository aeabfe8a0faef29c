#include "eigpert/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace eigpert {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RandomStream RandomStream::for_trial(std::uint64_t seed, std::uint64_t trial) {
  return RandomStream(mix64(seed ^ mix64(trial)));
}

std::uint64_t RandomStream::next() {
  const std::uint64_t out = mix64(state_);
  state_ += 0x9E3779B97F4A7C15ULL;
  return out;
}

std::int64_t RandomStream::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("RandomStream::uniform: empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(next());
  // Accept x < 2^64 - (2^64 mod range), a whole number of copies of the range.
  const std::uint64_t excess = (std::uint64_t{0} - range) % range;
  const std::uint64_t limit = ~std::uint64_t{0} - excess;
  std::uint64_t x = next();
  while (x > limit) x = next();
  return lo + static_cast<std::int64_t>(x % range);
}

void JordanSpec::validate() const {
  if (blocks.empty()) throw InputError("Jordan spec is empty");
  std::set<GaussianRational> seen;
  for (const auto& e : blocks) {
    if (e.sizes.empty()) throw InputError("eigenvalue " + e.value.str() + " has no Jordan blocks");
    for (auto s : e.sizes)
      if (s == 0) throw InputError("Jordan block of size 0");
    if (!seen.insert(e.value).second) throw InputError("eigenvalue " + e.value.str() + " listed twice");
  }
}

std::size_t JordanSpec::dimension() const {
  std::size_t n = 0;
  for (const auto& e : blocks)
    for (auto s : e.sizes) n += s;
  return n;
}

std::string JordanSpec::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k) os << ", ";
    os << blocks[k].value.str() << ": [";
    for (std::size_t j = 0; j < blocks[k].sizes.size(); ++j) os << (j ? "," : "") << blocks[k].sizes[j];
    os << "]";
  }
  os << "}";
  return os.str();
}

JordanTruth jordan_truth(const JordanSpec& spec) {
  spec.validate();
  JordanTruth t;
  t.n = spec.dimension();
  t.num_distinct = spec.blocks.size();
  t.char_poly = Poly::constant(1);
  t.min_poly = Poly::constant(1);
  std::vector<Poly> factors(t.n, Poly::constant(1));
  for (const auto& e : spec.blocks) {
    std::vector<std::size_t> sizes = e.sizes;
    std::sort(sizes.rbegin(), sizes.rend());
    const Poly lin = Poly::linear(e.value);
    std::size_t total = 0;
    for (std::size_t j = 0; j < sizes.size(); ++j) {
      total += sizes[j];
      t.defectivity += sizes[j] - 1;
      // Largest block feeds f_n, the next f_{n-1}, and so on.
      factors[t.n - 1 - j] *= pow(lin, static_cast<unsigned>(sizes[j]));
    }
    t.derogatory_index += sizes.size() - 1;
    t.char_poly *= pow(lin, static_cast<unsigned>(total));
    t.min_poly *= pow(lin, static_cast<unsigned>(sizes.front()));
  }
  t.invariant_factors.factors = std::move(factors);
  return t;
}

ExactMatrix build_jordan(const JordanSpec& spec) {
  spec.validate();
  const std::size_t n = spec.dimension();
  ExactMatrix m(n, n);
  std::size_t at = 0;
  for (const auto& e : spec.blocks) {
    for (auto size : e.sizes) {
      for (std::size_t k = 0; k < size; ++k) {
        m(at + k, at + k) = e.value;
        if (k + 1 < size) m(at + k, at + k + 1) = 1;
      }
      at += size;
    }
  }
  return m;
}

Unimodular random_unimodular(std::size_t n, std::size_t ops, RandomStream& rng) {
  Unimodular u{ExactMatrix::identity(n), ExactMatrix::identity(n)};
  if (n < 2) return u;
  const auto last = static_cast<std::int64_t>(n - 1);
  for (std::size_t k = 0; k < ops; ++k) {
    const bool swap = rng.uniform(0, 3) == 0;
    const auto i = static_cast<std::size_t>(rng.uniform(0, last));
    auto j = static_cast<std::size_t>(rng.uniform(0, last - 1));
    if (j >= i) ++j;
    if (swap) {
      for (std::size_t c = 0; c < n; ++c) std::swap(u.matrix(i, c), u.matrix(j, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(u.inverse(r, i), u.inverse(r, j));
    } else {
      std::int64_t mult = rng.uniform(-3, 2);
      if (mult >= 0) ++mult;
      const GaussianRational c(static_cast<long>(mult));
      // E = I + c e_i e_j^T: row_i += c row_j; E^-1 on the right: col_j -= c col_i.
      for (std::size_t col = 0; col < n; ++col)
        if (!u.matrix(j, col).is_zero()) u.matrix(i, col) += c * u.matrix(j, col);
      for (std::size_t row = 0; row < n; ++row)
        if (!u.inverse(row, i).is_zero()) u.inverse(row, j) -= c * u.inverse(row, i);
    }
  }
  return u;
}

ExactMatrix random_low_rank(std::size_t n, std::size_t r, std::int64_t bound, RandomStream& rng) {
  if (r < 1 || r > n) throw InputError("random_low_rank: rank must lie in [1, n]");
  for (int attempt = 0; attempt < 32; ++attempt) {
    ExactMatrix u(n, r);
    ExactMatrix v(r, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < r; ++k) u(i, k) = GaussianRational(static_cast<long>(rng.uniform(-bound, bound)));
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < n; ++j) v(k, j) = GaussianRational(static_cast<long>(rng.uniform(-bound, bound)));
    ExactMatrix b = u * v;
    if (rank(b) == r) return b;
  }
  throw std::runtime_error("random_low_rank: 32 consecutive rank-deficient draws");
}

JordanSpec random_jordan_spec(std::size_t n, RandomStream& rng) {
  std::vector<GaussianRational> pool;
  for (long v = -4; v <= 4; ++v) pool.emplace_back(v);
  pool.push_back(GaussianRational::i());
  pool.push_back(GaussianRational(Rational(1), Rational(1)));
  pool.push_back(-GaussianRational::i());

  const auto pool_size = static_cast<std::int64_t>(pool.size());
  const std::int64_t k = rng.uniform(1, std::min<std::int64_t>(static_cast<std::int64_t>(n), pool_size));
  for (std::int64_t j = 0; j < k; ++j) std::swap(pool[j], pool[rng.uniform(j, pool_size - 1)]);

  std::vector<std::size_t> mult(static_cast<std::size_t>(k), 1);
  for (std::size_t extra = n - static_cast<std::size_t>(k); extra > 0; --extra)
    ++mult[static_cast<std::size_t>(rng.uniform(0, k - 1))];

  JordanSpec spec;
  for (std::int64_t j = 0; j < k; ++j) {
    JordanSpec::Eigen e{pool[j], {}};
    auto left = static_cast<std::int64_t>(mult[j]);
    while (left > 0) {
      const std::int64_t size = rng.uniform(1, left);
      e.sizes.push_back(static_cast<std::size_t>(size));
      left -= size;
    }
    spec.blocks.push_back(std::move(e));
  }
  return spec;
}

void FuzzConfig::validate() const {
  if (n < 1) throw InputError("fuzz: n must be at least 1");
  if (rank < 1 || rank > n) throw InputError("fuzz: rank must satisfy 1 <= rank <= n");
  if (trials < 1) throw InputError("fuzz: trials must be at least 1");
  if (max_entry < 1) throw InputError("fuzz: max-entry must be at least 1");
}

TrialOutcome run_trial(const FuzzConfig& config, std::size_t trial) {
  TrialOutcome out;
  out.trial = trial;
  RandomStream rng = RandomStream::for_trial(config.seed, trial);
  out.spec = random_jordan_spec(config.n, rng);
  const Unimodular p = random_unimodular(config.n, config.ops(), rng);
  out.a = p.matrix * build_jordan(out.spec) * p.inverse;
  out.b = config.zero_perturbation ? ExactMatrix(config.n, config.n)
                                   : random_low_rank(config.n, config.rank, config.max_entry, rng);
  auto& v = out.violations;

  if (p.matrix * p.inverse != ExactMatrix::identity(config.n)) v.push_back("unimodular inverse is wrong");

  try {
    out.report = bound_report(out.a, out.b);
  } catch (const VerificationViolation& e) {
    v.emplace_back(e.what());
    return out;
  }
  const BoundReport& r = *out.report;
  const auto& sa = r.summary_a;
  const auto& sc = r.summary_c;

  const JordanTruth truth = jordan_truth(out.spec);
  if (sa.num_distinct != truth.num_distinct) v.push_back("|Λ(A)| disagrees with the Jordan spec");
  if (sa.defectivity != truth.defectivity) v.push_back("d(A) disagrees with the Jordan spec");
  if (sa.derogatory_index != truth.derogatory_index) v.push_back("I(A) disagrees with the Jordan spec");
  if (sa.char_poly != truth.char_poly) v.push_back("char(A) disagrees with the Jordan spec");
  if (sa.min_poly != truth.min_poly) v.push_back("min poly of A disagrees with the Jordan spec");
  if (sa.invariant_factors != truth.invariant_factors) v.push_back("invariant factors of A disagree with the Jordan spec");

  std::vector<GaussianRational> expected;
  for (const auto& e : out.spec.blocks) expected.push_back(e.value);
  std::sort(expected.begin(), expected.end());
  std::vector<GaussianRational> checked;
  for (const auto& chk : r.mg_drop_checks) checked.push_back(chk.lambda);
  if (checked != expected) v.push_back("eigenvalues of A in Q(i) were not all recovered");

  for (const auto& issue : consistency_issues(out.a, sa)) v.push_back("A: " + issue);
  for (const auto& issue : consistency_issues(out.a + out.b, sc)) v.push_back("C: " + issue);
  for (const auto* s : {&sa, &sc}) {
    const bool squarefree_min = distinct_root_count(s->min_poly) == static_cast<std::size_t>(s->min_poly.degree());
    if (s->diagonalizable() != squarefree_min) v.push_back("d(M) = 0 disagrees with a squarefree minimal polynomial");
  }

  if (!derogatory_index_check(r).holds) v.push_back("I(C) < I(A) - rank(B)|Λ(A)|");
  if (sc.nonderogatory()) {
    out.nonderogatory_case = true;
    if (!nonderogatory_check(r).holds) v.push_back("nonderogatory C but |Λ(A)| outside its bracket");
  }
  if (config.zero_perturbation && r.slack != 0) v.push_back("zero perturbation with nonzero slack");
  return out;
}

FuzzViolation::FuzzViolation(ReproductionBundle bundle)
    : VerificationViolation("verification violation in trial " + std::to_string(bundle.trial) + " (seed " +
                            std::to_string(bundle.seed) + "): " + bundle.reason),
      bundle_(std::move(bundle)) {}

FuzzReport merge(const std::vector<FuzzReport>& reports) {
  FuzzReport out;
  bool first = true;
  for (const auto& r : reports) {
    if (first) {
      out.n = r.n;
      out.rank = r.rank;
      out.seed = r.seed;
    }
    if (r.trials_run > 0) {
      out.min_slack = out.trials_run == 0 ? r.min_slack : std::min(out.min_slack, r.min_slack);
      out.max_slack = out.trials_run == 0 ? r.max_slack : std::max(out.max_slack, r.max_slack);
    }
    out.trials_run += r.trials_run;
    out.violations += r.violations;
    out.tight_count += r.tight_count;
    out.defective_c_count += r.defective_c_count;
    out.nonderogatory_count += r.nonderogatory_count;
    out.mg_checks += r.mg_checks;
    out.elapsed_seconds += r.elapsed_seconds;
    for (const auto& [slack, count] : r.slack_histogram) out.slack_histogram[slack] += count;
    first = false;
  }
  return out;
}

FuzzReport run_fuzz(const FuzzConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  std::vector<TrialOutcome> outcomes(config.trials);
  std::vector<std::exception_ptr> errors(config.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < config.trials; t = next++) {
      try {
        outcomes[t] = run_trial(config, t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  std::size_t threads = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, config.trials);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
  }

  FuzzReport report;
  report.n = config.n;
  report.rank = config.rank;
  report.seed = config.seed;
  for (std::size_t t = 0; t < config.trials; ++t) {
    if (errors[t]) std::rethrow_exception(errors[t]);
    const TrialOutcome& o = outcomes[t];
    if (!o.violations.empty()) {
      std::string reason = "trial spec " + o.spec.str();
      for (const auto& line : o.violations) reason += "; " + line;
      throw FuzzViolation({config.seed, t, reason, o.a, o.b});
    }
    const BoundReport& r = *o.report;
    report.min_slack = report.trials_run == 0 ? r.slack : std::min(report.min_slack, r.slack);
    report.max_slack = report.trials_run == 0 ? r.slack : std::max(report.max_slack, r.slack);
    ++report.trials_run;
    ++report.slack_histogram[r.slack];
    if (r.slack == 0) ++report.tight_count;
    if (r.summary_c.defectivity >= 1) ++report.defective_c_count;
    if (o.nonderogatory_case) ++report.nonderogatory_count;
    report.mg_checks += r.mg_drop_checks.size();
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ExactMatrix jordan_block(std::size_t n, const GaussianRational& lambda0) {
  return build_jordan(JordanSpec{{{lambda0, {n}}}});
}

ExactMatrix staircase_perturbation(std::size_t n, std::size_t r) {
  if (r < 1 || r >= n) throw InputError("staircase perturbation needs 1 <= r < n");
  ExactMatrix b(n, n);
  for (std::size_t i = 0; i < r; ++i) {
    b(i, i) = GaussianRational(static_cast<long>(i + 1));
    b(i, i + 1) = -1;
  }
  return b;
}

ExactMatrix fixed_example_a() {
  return {{1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}};
}

ExactMatrix fixed_example_b() {
  return {{1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, {0, 0, 0, 0, 0}, {1, 1, 1, 1, 1}, {0, 0, 0, 0, 0}};
}

ExampleSuiteResult worked_example_suite(std::size_t n, const GaussianRational& lambda0) {
  if (n < 2) throw InputError("the Jordan-block family needs n >= 2");
  ExampleSuiteResult out;
  out.n = n;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) out.failures.push_back(what);
    return ok;
  };

  const ExactMatrix a = jordan_block(n, lambda0);
  for (std::size_t r = 1; r < n; ++r) {
    const BoundReport rep = bound_report(a, staircase_perturbation(n, r));
    JordanFamilyRow row;
    row.r = r;
    row.farrell = rep.farrell_bound;
    row.improved = rep.improved_bound;
    row.defectivity_c = rep.summary_c.defectivity;
    row.actual = rep.actual_distinct_c;
    const auto rs = static_cast<std::int64_t>(r);
    const auto ns = static_cast<std::int64_t>(n);
    const std::string tag = "r=" + std::to_string(r) + ": ";
    row.ok = expect(rep.rank_b == r, tag + "rank(B_r) != r");
    row.ok &= expect(row.farrell == ns + rs, tag + "farrell != n + r");
    row.ok &= expect(row.improved == 2 * rs + 1, tag + "improved != 2r + 1");
    row.ok &= expect(row.defectivity_c == n - 1 - r, tag + "d(C_r) != n - 1 - r");
    row.ok &= expect(static_cast<std::int64_t>(row.actual) <= row.improved && row.actual <= n,
                     tag + "|Λ(C_r)| exceeds min(n, improved)");
    out.family.push_back(row);
  }

  out.fixed_pair = bound_report(fixed_example_a(), fixed_example_b());
  const BoundReport& f = out.fixed_pair;
  bool ok = expect(f.summary_a.num_distinct == 1, "fixed pair: |Λ(A)| != 1");
  ok &= expect(f.summary_a.defectivity == 2, "fixed pair: d(A) != 2");
  ok &= expect(f.rank_b == 1, "fixed pair: rank(B) != 1");
  ok &= expect(f.summary_c.defectivity == 1, "fixed pair: d(C) != 1");
  ok &= expect(f.actual_distinct_c == 3, "fixed pair: |Λ(C)| != 3");
  ok &= expect(f.farrell_bound == 4, "fixed pair: farrell != 4");
  ok &= expect(f.improved_bound == 3, "fixed pair: improved != 3");
  ok &= expect(f.slack == 0, "fixed pair: slack != 0");
  out.fixed_pair_ok = ok;
  return out;
}

}  // namespace eigpert
