#include "eigpert/cli.hpp"

#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "eigpert/bounds.hpp"
#include "eigpert/errors.hpp"
#include "eigpert/fuzz.hpp"
#include "eigpert/matrix_io.hpp"
#include "eigpert/report.hpp"

namespace eigpert {

namespace {

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
}

Format to_format(const std::string& s) { return s == "json" ? Format::Json : Format::Text; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Jordan-structure invariants and distinct-eigenvalue perturbation bounds", "eigpert"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string bundle_dir = "eigpert-repro";

  std::string analyze_file;
  auto* analyze = app.add_subcommand("analyze", "Eigenstructure summary of one matrix");
  analyze->add_option("file", analyze_file, "Matrix file")->required();
  add_format(analyze, format);

  std::string a_file;
  std::string b_file;
  auto* bound = app.add_subcommand("bound", "Distinct-eigenvalue bounds for C = A + B");
  bound->add_option("--a", a_file, "Matrix file for A")->required();
  bound->add_option("--b", b_file, "Matrix file for the perturbation B")->required();
  add_format(bound, format);
  bound->add_option("--bundle-dir", bundle_dir, "Where to write a reproduction bundle on violation");

  std::string split_file;
  std::size_t split_samples = 0;
  std::uint64_t split_seed = 1;
  auto* split = app.add_subcommand("split", "Bounds from the Hermitian/skew-Hermitian splitting");
  split->add_option("file", split_file, "Matrix file")->required();
  split->add_option("--samples", split_samples, "Random rational shifts checked against the candidate minimum");
  split->add_option("--seed", split_seed, "Seed for --samples");
  add_format(split, format);

  FuzzConfig fuzz_cfg;
  std::size_t fuzz_ops = 0;
  auto* fuzz = app.add_subcommand("fuzz", "Randomised verification campaign");
  fuzz->add_option("--n", fuzz_cfg.n, "Matrix dimension")->required();
  fuzz->add_option("--rank", fuzz_cfg.rank, "Perturbation rank")->required();
  fuzz->add_option("--trials", fuzz_cfg.trials, "Number of trials")->required();
  fuzz->add_option("--seed", fuzz_cfg.seed, "Campaign seed")->required();
  fuzz->add_option("--max-entry", fuzz_cfg.max_entry, "Entry bound for the factors of B")->capture_default_str();
  auto* ops_opt = fuzz->add_option("--ops", fuzz_ops, "Unimodular operations per conjugation (default 3n)");
  fuzz->add_option("--threads", fuzz_cfg.threads, "Worker threads (0 = all cores)");
  fuzz->add_flag("--zero-perturbation", fuzz_cfg.zero_perturbation, "Use B = 0 in every trial");
  add_format(fuzz, format);
  fuzz->add_option("--bundle-dir", bundle_dir, "Where to write a reproduction bundle on violation");

  std::size_t examples_n = 10;
  auto* examples = app.add_subcommand("examples", "Jordan-block family and the fixed 5x5 pair");
  examples->add_option("--n", examples_n, "Dimension of the Jordan block")->capture_default_str();
  add_format(examples, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitInput;
  }

  const Format fmt = to_format(format);
  try {
    if (analyze->parsed()) {
      const ExactMatrix m = read_matrix_file(analyze_file);
      out << render_analysis(m, summarize(m), fmt);
    } else if (bound->parsed()) {
      const ExactMatrix a = read_matrix_file(a_file);
      const ExactMatrix b = read_matrix_file(b_file);
      try {
        out << render_bound(bound_report(a, b), fmt);
      } catch (const FuzzViolation&) {
        throw;
      } catch (const VerificationViolation& v) {
        throw FuzzViolation({0, 0, v.what(), a, b});
      }
    } else if (split->parsed()) {
      const ExactMatrix a = read_matrix_file(split_file);
      const SplitReport report = split_bounds(a);
      out << render_split(report, fmt);
      if (split_samples > 0) {
        const HermitianSplit hs{report.h_part, report.s_part};
        RandomStream rng(mix64(split_seed));
        for (std::size_t k = 0; k < split_samples; ++k) {
          const GaussianRational alpha(Rational(rng.uniform(-50, 50), rng.uniform(1, 12)),
                                       Rational(rng.uniform(-50, 50), rng.uniform(1, 12)));
          const auto v = shifted_split_value(hs, alpha, report.defectivity_a);
          if (v.min_value < report.shifted_min_bound || v.product_value < report.shifted_product_bound)
            throw FuzzViolation({split_seed, k, "shift " + alpha.str() + " beats the candidate minimum", a,
                                 ExactMatrix(a.rows(), a.cols())});
        }
        err << "checked " << split_samples << " random shifts against the candidate minimum\n";
      }
    } else if (fuzz->parsed()) {
      if (ops_opt->count() > 0) fuzz_cfg.unimodular_ops = fuzz_ops;
      const FuzzReport report = run_fuzz(fuzz_cfg);
      out << render_fuzz(fuzz_cfg, report, fmt);
      err << "elapsed_seconds " << report.elapsed_seconds << "\n";
    } else if (examples->parsed()) {
      const ExampleSuiteResult res = worked_example_suite(examples_n);
      out << render_examples(res, fmt);
      if (!res.ok()) return kExitViolation;
    }
  } catch (const FuzzViolation& v) {
    const ReproductionBundle& b = v.bundle();
    const auto dir = std::filesystem::path(bundle_dir) /
                     ("seed_" + std::to_string(b.seed) + "_trial_" + std::to_string(b.trial));
    err << "VERIFICATION VIOLATION: " << v.what() << "\n";
    try {
      err << "reproduction bundle: " << write_bundle(dir, b).string() << "\n";
    } catch (const std::exception& e) {
      err << "could not write reproduction bundle: " << e.what() << "\n";
    }
    return kExitViolation;
  } catch (const VerificationViolation& v) {
    err << "VERIFICATION VIOLATION: " << v.what() << "\n";
    return kExitViolation;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace eigpert
