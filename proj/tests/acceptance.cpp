// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eigpert/bounds.hpp"
#include "eigpert/cli.hpp"
#include "eigpert/eigenstructure.hpp"
#include "eigpert/fuzz.hpp"
#include "eigpert/report.hpp"
#include "support.hpp"

using namespace eigpert;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct CliRun {
  int code = 0;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "eigpert");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

std::string fixture(const char* name) { return std::string(EIGPERT_FIXTURE_DIR) + "/" + name; }

Outcome fixed_pair() {
  Outcome o;
  const CliRun r = cli({"bound", "--a", fixture("pair_A.mat"), "--b", fixture("pair_B.mat"), "--format", "json"});
  o.require(r.code == kExitOk, "bound exited " + std::to_string(r.code));
  if (!o.pass) return o;
  const auto j = nlohmann::json::parse(r.out);
  const std::vector<std::pair<const char*, int>> expected{
      {"distinct_a", 1},    {"defectivity_a", 2}, {"rank_b", 1},          {"defectivity_c", 1},
      {"distinct_c", 3},    {"farrell_bound", 4}, {"improved_bound", 3}, {"slack", 0},
      {"actual_distinct", 3}};
  for (const auto& [key, value] : expected)
    o.require(j[key].get<int>() == value, std::string(key) + " = " + j[key].dump());
  o.detail = o.pass ? "|Λ(A)|=1 d(A)=2 rank(B)=1 d(C)=1 |Λ(C)|=3 farrell=4 improved=3 slack=0" : o.detail;
  return o;
}

Outcome jordan_family() {
  Outcome o;
  const CliRun r = cli({"examples", "--n", "10", "--format", "json"});
  o.require(r.code == kExitOk, "examples exited " + std::to_string(r.code));
  const auto j = nlohmann::json::parse(r.out);
  const auto& rows = j["jordan_family"];
  o.require(rows.size() == 9, "expected rows r=1..9");
  std::string actual;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& row = rows[k];
    const int rr = row["r"].get<int>();
    o.require(rr == static_cast<int>(k) + 1, "row order");
    o.require(row["farrell_bound"].get<int>() == 10 + rr, "farrell at r=" + std::to_string(rr));
    o.require(row["improved_bound"].get<int>() == 2 * rr + 1, "improved at r=" + std::to_string(rr));
    o.require(row["defectivity_c"].get<int>() == 9 - rr, "d(C_r) at r=" + std::to_string(rr));
    o.require(row["actual_distinct"].get<int>() <= 2 * rr + 1, "actual > improved at r=" + std::to_string(rr));
    actual += (k ? "," : "") + row["actual_distinct"].dump();
  }
  if (o.pass) o.detail = "r=1..9 exact; |Λ(C_r)| = " + actual;
  return o;
}

// The fuzz corpus shared by criteria 3 and 5.
struct Corpus {
  std::vector<TrialOutcome> trials;
  double seconds = 0;
};

constexpr std::uint64_t kCampaignSeed = 20240611;

Corpus build_corpus() {
  Corpus c;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::size_t rank = 1; rank <= 3; ++rank) {
      FuzzConfig cfg;
      cfg.n = n;
      cfg.rank = rank;
      cfg.trials = 28;
      cfg.seed = kCampaignSeed;
      const FuzzReport rep = run_fuzz(cfg);  // throws on any violation
      if (rep.violations != 0) throw std::runtime_error("campaign reported violations");
      for (std::size_t t = 0; t < cfg.trials; ++t) c.trials.push_back(run_trial(cfg, t));
    }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

Outcome fuzz_campaign(const Corpus& corpus) {
  Outcome o;
  std::size_t defective = 0;
  std::size_t mg = 0;
  for (const auto& t : corpus.trials) {
    const std::string where = "trial " + std::to_string(t.trial) + " n=" + std::to_string(t.a.rows());
    o.require(t.violations.empty(), where + ": " + (t.violations.empty() ? "" : t.violations.front()));
    o.require(t.report.has_value(), where + ": no report");
    if (!t.report) continue;
    const BoundReport& r = *t.report;
    const std::size_t n = r.n;
    const auto actual = static_cast<std::int64_t>(r.actual_distinct_c);
    o.require(actual <= r.improved_bound, where + ": |Λ(C)| exceeds improved bound");
    o.require(r.actual_distinct_c + r.summary_c.defectivity <= n, where + ": |Λ(C)| + d(C) > n");
    o.require(static_cast<std::int64_t>(r.summary_c.derogatory_index) >=
                  static_cast<std::int64_t>(r.summary_a.derogatory_index) -
                      static_cast<std::int64_t>(r.rank_b * r.summary_a.num_distinct),
              where + ": derogatory index bound");
    o.require((r.improved_bound < r.farrell_bound) == (r.summary_c.defectivity >= 1),
              where + ": improved < farrell does not match d(C) >= 1");
    if (r.summary_c.defectivity >= 1) ++defective;
    // Geometric drop recomputed from the matrices at every spec eigenvalue.
    const ExactMatrix c = t.a + t.b;
    for (const auto& e : t.spec.blocks) {
      const std::size_t mg_a = geometric_multiplicity_at(t.a, e.value);
      const std::size_t mg_c = geometric_multiplicity_at(c, e.value);
      o.require(mg_a == e.sizes.size(), where + ": m_g(A) disagrees with spec");
      o.require(mg_c + r.rank_b >= mg_a, where + ": m_g drop exceeds rank(B)");
      ++mg;
    }
  }
  o.require(corpus.trials.size() >= 500, "fewer than 500 trials");
  o.require(defective > 0, "no trial with d(C) >= 1; strictness never exercised");
  o.require(corpus.seconds < 60, "campaign took " + std::to_string(corpus.seconds) + " s");
  if (o.pass)
    o.detail = std::to_string(corpus.trials.size()) + " trials, 0 violations, " + std::to_string(defective) +
               " with d(C)>=1, " + std::to_string(mg) + " m_g checks";
  return o;
}

Outcome self_consistency() {
  Outcome o;
  RandomStream rng(mix64(kCampaignSeed + 4));
  std::size_t count = 0;
  for (; count < 240; ++count) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 8));
    const JordanSpec spec = random_jordan_spec(n, rng);
    const Unimodular p = random_unimodular(n, 3 * n, rng);
    const ExactMatrix m = p.matrix * build_jordan(spec) * p.inverse;
    const EigenstructureSummary s = summarize(m);
    const JordanTruth truth = jordan_truth(spec);
    const auto issues = consistency_issues(m, s);
    o.require(issues.empty(), spec.str() + ": " + (issues.empty() ? "" : issues.front()));
    o.require(s.char_poly == truth.char_poly && s.min_poly == truth.min_poly &&
                  s.invariant_factors == truth.invariant_factors,
              spec.str() + ": polynomials disagree with the Jordan structure");
    o.require(s.num_distinct == truth.num_distinct && s.defectivity == truth.defectivity &&
                  s.derogatory_index == truth.derogatory_index,
              spec.str() + ": counts disagree with the Jordan structure");
    o.require(s.num_distinct + s.defectivity + s.derogatory_index == n, spec.str() + ": counts do not sum to n");
  }
  if (o.pass) o.detail = std::to_string(count) + " random Jordan-structured matrices";
  return o;
}

Outcome characterizations(const Corpus& corpus) {
  Outcome o;
  RandomStream rng(mix64(kCampaignSeed + 5));
  std::size_t scalars = 0;
  for (std::size_t n = 1; n <= 8; ++n)
    for (int k = 0; k < 6; ++k, ++scalars) {
      const auto c = testing::random_gaussian(rng, 50, 9);
      o.require(summarize(ExactMatrix::scalar(n, c)).derogatory_index == n - 1, "I(cI) != n-1 for c=" + c.str());
    }
  std::size_t companions = 0;
  for (; companions < 60; ++companions) {
    const auto deg = rng.uniform(1, 7);
    std::vector<GaussianRational> coeffs;
    for (std::int64_t j = 0; j < deg; ++j) coeffs.push_back(testing::random_gaussian(rng, 5, 3));
    coeffs.push_back(1);
    const Poly p(coeffs);
    const auto s = summarize(testing::companion(p));
    o.require(s.derogatory_index == 0, "I(companion) != 0 for " + p.str());
    o.require(s.char_poly == p, "companion char poly mismatch for " + p.str());
  }
  std::size_t summaries = 0;
  for (const auto& t : corpus.trials) {
    if (!t.report) continue;
    for (const auto* s : {&t.report->summary_a, &t.report->summary_c}) {
      const bool squarefree = distinct_root_count(s->min_poly) == static_cast<std::size_t>(s->min_poly.degree());
      o.require((s->defectivity == 0) == squarefree, "d = 0 iff squarefree min poly fails on " + s->min_poly.str());
      ++summaries;
    }
  }
  if (o.pass)
    o.detail = std::to_string(scalars) + " scalar, " + std::to_string(companions) + " companion, " +
               std::to_string(summaries) + " corpus summaries";
  return o;
}

Outcome split_bounds_suite() {
  Outcome o;
  RandomStream rng(mix64(kCampaignSeed + 6));
  std::size_t matrices = 0;
  std::size_t samples = 0;
  for (; matrices < 100; ++matrices) {
    const auto n = static_cast<std::size_t>(rng.uniform(4, 6));
    ExactMatrix a;
    if (matrices % 2 == 0) {
      a = testing::random_matrix(n, n, rng, 2, 2);
    } else {
      const Unimodular p = random_unimodular(n, 2 * n, rng);
      a = p.matrix * build_jordan(random_jordan_spec(n, rng)) * p.inverse;
    }
    SplitReport r;
    try {
      r = split_bounds(a);
    } catch (const std::exception& e) {
      o.require(false, std::string("split_bounds threw: ") + e.what());
      break;
    }
    const auto lhs = static_cast<std::int64_t>(r.distinct_a);
    o.require(lhs <= r.shifted_min_bound && r.shifted_min_bound <= r.split_min_bound &&
                  r.split_min_bound <= r.split_product_bound,
              "min-chain out of order on matrix " + std::to_string(matrices));
    o.require(lhs <= r.shifted_product_bound && r.shifted_product_bound <= r.split_product_bound,
              "product-chain out of order on matrix " + std::to_string(matrices));
    const HermitianSplit hs{r.h_part, r.s_part};
    for (int k = 0; k < 200; ++k, ++samples) {
      const GaussianRational alpha = testing::random_gaussian(rng, 40, 12);
      const auto v = shifted_split_value(hs, alpha, r.defectivity_a);
      o.require(v.min_value >= r.shifted_min_bound && v.product_value >= r.shifted_product_bound,
                "alpha " + alpha.str() + " beats the candidate minimum");
    }
  }
  if (o.pass)
    o.detail = std::to_string(matrices) + " matrices, " + std::to_string(samples) + " random shifts";
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> args{"fuzz", "--n",    "6", "--rank", "2",      "--trials",
                                      "60",   "--seed", "77", "--format", "json"};
  const CliRun first = cli(args);
  auto serial = args;
  serial.insert(serial.end(), {"--threads", "1"});
  const CliRun second = cli(serial);
  o.require(first.code == kExitOk && second.code == kExitOk, "fuzz did not exit cleanly");
  o.require(!first.out.empty() && first.out == second.out, "json reports differ between runs");
  FuzzConfig cfg;
  cfg.n = 5;
  cfg.rank = 3;
  cfg.trials = 40;
  cfg.seed = 123456789;
  const std::string a = render_fuzz(cfg, run_fuzz(cfg), Format::Json);
  cfg.threads = 3;
  const std::string b = render_fuzz(cfg, run_fuzz(cfg), Format::Json);
  o.require(a == b, "library json differs across thread counts");
  if (o.pass) o.detail = "byte-identical json (" + std::to_string(first.out.size()) + " bytes)";
  return o;
}

bool report(int id, const char* name, double limit_seconds, const std::function<Outcome()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    o.pass = false;
    o.detail = "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s";
  }
  std::printf("[%s] %d. %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "fixed 5x5 pair via bound", 1.0, fixed_pair);
  ok &= report(2, "Jordan-block family via examples --n 10", 10.0, jordan_family);

  Corpus corpus;
  ok &= report(3, "fuzz campaign n=3..8 rank=1..3", 60.0, [&] {
    corpus = build_corpus();
    return fuzz_campaign(corpus);
  });
  ok &= report(4, "eigenstructure self-consistency", 0, self_consistency);
  ok &= report(5, "derogatory and defectivity characterizations", 0, [&] { return characterizations(corpus); });
  ok &= report(6, "splitting bounds and shift minimum", 0, split_bounds_suite);
  ok &= report(7, "fuzz report determinism", 0, determinism);
  return ok ? 0 : 1;
}
