#include "eigpert/report.hpp"

#include <sstream>

#include <json.hpp>

namespace eigpert {

using Json = nlohmann::ordered_json;

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json poly_list(const std::vector<Poly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

std::string ok_word(bool holds) { return holds ? "ok" : "FAILED"; }

}  // namespace

std::vector<Check> bound_checks(const BoundReport& r) {
  std::vector<Check> out;
  const auto& sa = r.summary_a;
  const auto& sc = r.summary_c;
  const auto actual = static_cast<std::int64_t>(r.actual_distinct_c);

  out.push_back({"improved_bound", actual <= r.improved_bound,
                 std::to_string(actual) + " <= " + std::to_string(r.improved_bound)});
  out.push_back({"improved_vs_farrell", (r.improved_bound < r.farrell_bound) == (sc.defectivity >= 1),
                 "improved " + std::to_string(r.improved_bound) + ", farrell " + std::to_string(r.farrell_bound) +
                     ", d(C) " + std::to_string(sc.defectivity)});
  out.push_back({"distinct_plus_defectivity_c", r.actual_distinct_c + sc.defectivity <= r.n,
                 std::to_string(r.actual_distinct_c) + " + " + std::to_string(sc.defectivity) +
                     " <= " + std::to_string(r.n)});
  out.push_back({"s1_plus_s2", r.s1_size + r.s2_size == r.actual_distinct_c,
                 std::to_string(r.s1_size) + " + " + std::to_string(r.s2_size) + " = " +
                     std::to_string(r.actual_distinct_c)});
  const auto s2_cap = static_cast<std::int64_t>(sa.num_distinct * r.rank_b + sa.defectivity) -
                      static_cast<std::int64_t>(sc.defectivity);
  out.push_back({"s2_geometric_total", static_cast<std::int64_t>(r.s2_geometric_total) <= s2_cap,
                 std::to_string(r.s2_geometric_total) + " <= " + std::to_string(s2_cap)});
  if (r.s1_size == 0) {
    out.push_back({"empty_s1", r.farrell_bound > static_cast<std::int64_t>(r.n),
                   std::to_string(r.farrell_bound) + " > " + std::to_string(r.n)});
  }
  for (const auto& chk : r.mg_drop_checks) {
    out.push_back({"mg_drop", chk.satisfied,
                   "lambda " + chk.lambda.str() + ": m_g(C) " + std::to_string(chk.mg_c) + " >= m_g(A) " +
                       std::to_string(chk.mg_a) + " - rank(B) " + std::to_string(r.rank_b)});
  }
  const DerogatoryCheck dc = derogatory_index_check(r);
  out.push_back({"derogatory_index", dc.holds, std::to_string(dc.lhs) + " >= " + std::to_string(dc.rhs)});
  if (sa.defectivity == 0 && r.rank_b == 1) {
    const RankOneCheck c = rank_one_check(r);
    out.push_back({"rank_one", c.holds,
                   std::to_string(c.actual) + " <= " + std::to_string(c.bound) +
                       (c.c_diagonalizable ? " (C diagonalizable)" : " (C not diagonalizable)")});
  }
  if (sc.nonderogatory()) {
    const NonderogatoryCheck c = nonderogatory_check(r);
    out.push_back({"nonderogatory", c.holds,
                   c.lower.get_str() + " <= " + std::to_string(c.value) + " <= " + std::to_string(c.upper)});
  }
  return out;
}

std::string render_analysis(const ExactMatrix& m, const EigenstructureSummary& s, Format format) {
  const auto eigen = gaussian_rational_eigenvalues(s);
  const auto krylov = static_cast<std::size_t>(s.min_poly.degree());
  if (format == Format::Json) {
    Json j;
    j["n"] = s.n;
    j["distinct"] = s.num_distinct;
    j["defectivity"] = s.defectivity;
    j["derogatory_index"] = s.derogatory_index;
    j["diagonalizable"] = s.diagonalizable();
    j["nonderogatory"] = s.nonderogatory();
    j["char_poly"] = s.char_poly.str();
    j["min_poly"] = s.min_poly.str();
    j["krylov_degree_bound"] = krylov;
    j["invariant_factors"] = poly_list(s.invariant_factors.factors);
    Json profile = Json::array();
    for (const auto& part : s.multiplicity_profile.parts)
      profile.push_back({{"factor", part.factor.str()}, {"multiplicity", part.multiplicity}});
    j["multiplicity_profile"] = profile;
    Json ev = Json::array();
    for (const auto& lambda : eigen)
      ev.push_back({{"lambda", lambda.str()},
                    {"algebraic", algebraic_multiplicity_at(s.char_poly, lambda)},
                    {"geometric", geometric_multiplicity_at(m, lambda)}});
    j["rational_eigenvalues"] = ev;
    return dump(j);
  }
  std::ostringstream os;
  os << "n                 " << s.n << "\n"
     << "distinct          " << s.num_distinct << "\n"
     << "defectivity       " << s.defectivity << "\n"
     << "derogatory_index  " << s.derogatory_index << "\n"
     << "char poly         " << s.char_poly << "\n"
     << "min poly          " << s.min_poly << "\n"
     << "krylov bound      " << krylov << "\n"
     << "invariant factors";
  for (const auto& f : s.invariant_factors.factors) os << "\n  " << f;
  os << "\nmultiplicities";
  for (const auto& part : s.multiplicity_profile.parts) os << "\n  (" << part.factor << ")^" << part.multiplicity;
  if (!eigen.empty()) {
    os << "\neigenvalues in Q(i)";
    for (const auto& lambda : eigen)
      os << "\n  " << lambda << "  m_a " << algebraic_multiplicity_at(s.char_poly, lambda) << "  m_g "
         << geometric_multiplicity_at(m, lambda);
  }
  os << "\n";
  return os.str();
}

std::string render_bound(const BoundReport& r, Format format) {
  const auto checks = bound_checks(r);
  if (format == Format::Json) {
    Json j;
    j["n"] = r.n;
    j["rank_b"] = r.rank_b;
    j["distinct_a"] = r.summary_a.num_distinct;
    j["defectivity_a"] = r.summary_a.defectivity;
    j["derogatory_a"] = r.summary_a.derogatory_index;
    j["distinct_c"] = r.summary_c.num_distinct;
    j["defectivity_c"] = r.summary_c.defectivity;
    j["derogatory_c"] = r.summary_c.derogatory_index;
    j["farrell_bound"] = r.farrell_bound;
    j["improved_bound"] = r.improved_bound;
    j["actual_distinct"] = r.actual_distinct_c;
    j["slack"] = r.slack;
    j["s1_size"] = r.s1_size;
    j["s2_size"] = r.s2_size;
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
    j["checks"] = arr;
    return dump(j);
  }
  std::ostringstream os;
  os << "n " << r.n << ", rank(B) " << r.rank_b << "\n"
     << "A: distinct " << r.summary_a.num_distinct << ", defectivity " << r.summary_a.defectivity
     << ", derogatory_index " << r.summary_a.derogatory_index << "\n"
     << "C: distinct " << r.summary_c.num_distinct << ", defectivity " << r.summary_c.defectivity
     << ", derogatory_index " << r.summary_c.derogatory_index << "\n"
     << "farrell bound   " << r.farrell_bound << "\n"
     << "improved bound  " << r.improved_bound << "\n"
     << "actual distinct " << r.actual_distinct_c << " (slack " << r.slack << ")\n"
     << "shared / new    " << r.s1_size << " / " << r.s2_size << "\n"
     << "checks\n";
  for (const auto& c : checks) os << "  [" << ok_word(c.holds) << "] " << c.name << ": " << c.detail << "\n";
  return os.str();
}

std::string render_split(const SplitReport& r, Format format) {
  if (format == Format::Json) {
    Json j;
    j["n"] = r.h_part.rows();
    j["distinct_a"] = r.distinct_a;
    j["defectivity_a"] = r.defectivity_a;
    j["rank_h"] = r.rank_h;
    j["rank_s"] = r.rank_s;
    j["distinct_h"] = r.distinct_h;
    j["distinct_s"] = r.distinct_s;
    j["split_min_bound"] = r.split_min_bound;
    j["split_product_bound"] = r.split_product_bound;
    j["shifted_min_bound"] = r.shifted_min_bound;
    j["shifted_product_bound"] = r.shifted_product_bound;
    Json arr = Json::array();
    for (const auto& c : r.chosen_alpha_candidates)
      arr.push_back({{"alpha", c.describe()},
                     {"multiplicity", c.multiplicity},
                     {"rank_h", c.rank_h},
                     {"rank_s", c.rank_s},
                     {"min_value", c.min_value},
                     {"product_value", c.product_value}});
    j["alpha_candidates"] = arr;
    return dump(j);
  }
  std::ostringstream os;
  os << "distinct(A) " << r.distinct_a << ", defectivity(A) " << r.defectivity_a << "\n"
     << "H: rank " << r.rank_h << ", distinct " << r.distinct_h << "\n"
     << "S: rank " << r.rank_s << ", distinct " << r.distinct_s << "\n"
     << "split min bound        " << r.split_min_bound << "\n"
     << "split product bound    " << r.split_product_bound << "\n"
     << "shifted min bound      " << r.shifted_min_bound << "\n"
     << "shifted product bound  " << r.shifted_product_bound << "\n"
     << "alpha candidates\n";
  for (const auto& c : r.chosen_alpha_candidates)
    os << "  alpha = " << c.describe() << ": rank(H+aI) " << c.rank_h << ", rank(S-aI) " << c.rank_s << ", min "
       << c.min_value << ", product " << c.product_value << "\n";
  return os.str();
}

std::string render_fuzz(const FuzzConfig& config, const FuzzReport& r, Format format) {
  const std::string policy =
      "Jordan specs over eigenvalues {-4..4, i, 1+i, -i}; A = P J P^-1 with P from " + std::to_string(config.ops()) +
      " unimodular row operations (multipliers in [-3,3], swaps); B = U V with integer entries in [-" +
      std::to_string(config.max_entry) + ", " + std::to_string(config.max_entry) + "]" +
      (config.zero_perturbation ? "; B forced to zero" : "");
  if (format == Format::Json) {
    Json j;
    j["n"] = config.n;
    j["rank"] = config.rank;
    j["trials"] = config.trials;
    j["seed"] = config.seed;
    j["max_entry"] = config.max_entry;
    j["unimodular_ops"] = config.ops();
    j["generator_policy"] = policy;
    j["trials_run"] = r.trials_run;
    j["violations"] = r.violations;
    j["tight_count"] = r.tight_count;
    Json hist = Json::object();
    for (const auto& [slack, count] : r.slack_histogram) hist[std::to_string(slack)] = count;
    j["slack_histogram"] = hist;
    j["min_slack"] = r.min_slack;
    j["max_slack"] = r.max_slack;
    j["defective_c_count"] = r.defective_c_count;
    j["nonderogatory_count"] = r.nonderogatory_count;
    j["mg_checks"] = r.mg_checks;
    return dump(j);
  }
  std::ostringstream os;
  os << "campaign n=" << config.n << " rank=" << config.rank << " trials=" << config.trials
     << " seed=" << config.seed << "\n"
     << "policy: " << policy << "\n"
     << "trials run      " << r.trials_run << "\n"
     << "violations      " << r.violations << "\n"
     << "tight trials    " << r.tight_count << "\n"
     << "slack range     [" << r.min_slack << ", " << r.max_slack << "]\n"
     << "d(C) >= 1       " << r.defective_c_count << "\n"
     << "nonderogatory C " << r.nonderogatory_count << "\n"
     << "m_g checks      " << r.mg_checks << "\n"
     << "slack histogram\n";
  for (const auto& [slack, count] : r.slack_histogram) os << "  " << slack << ": " << count << "\n";
  return os.str();
}

std::string render_examples(const ExampleSuiteResult& res, Format format) {
  const auto& f = res.fixed_pair;
  if (format == Format::Json) {
    Json j;
    j["n"] = res.n;
    Json rows = Json::array();
    for (const auto& row : res.family)
      rows.push_back({{"r", row.r},
                      {"farrell_bound", row.farrell},
                      {"improved_bound", row.improved},
                      {"defectivity_c", row.defectivity_c},
                      {"actual_distinct", row.actual},
                      {"ok", row.ok}});
    j["jordan_family"] = rows;
    j["fixed_pair"] = {{"distinct_a", f.summary_a.num_distinct},  {"defectivity_a", f.summary_a.defectivity},
                       {"rank_b", f.rank_b},                      {"defectivity_c", f.summary_c.defectivity},
                       {"actual_distinct", f.actual_distinct_c}, {"farrell_bound", f.farrell_bound},
                       {"improved_bound", f.improved_bound},     {"slack", f.slack},
                       {"ok", res.fixed_pair_ok}};
    j["failures"] = res.failures;
    j["ok"] = res.ok();
    return dump(j);
  }
  std::ostringstream os;
  os << "Jordan block J_" << res.n << " plus staircase B_r\n"
     << "   r  farrell  improved  d(C_r)  |Λ(C_r)|\n";
  for (const auto& row : res.family) {
    os.width(4);
    os << row.r;
    os.width(9);
    os << row.farrell;
    os.width(10);
    os << row.improved;
    os.width(8);
    os << row.defectivity_c;
    os.width(10);
    os << row.actual << "  " << ok_word(row.ok) << "\n";
  }
  os << "fixed 5x5 pair: |Λ(A)| " << f.summary_a.num_distinct << ", d(A) " << f.summary_a.defectivity
     << ", rank(B) " << f.rank_b << ", d(C) " << f.summary_c.defectivity << ", |Λ(C)| " << f.actual_distinct_c
     << ", farrell " << f.farrell_bound << ", improved " << f.improved_bound << "  " << ok_word(res.fixed_pair_ok)
     << "\n";
  for (const auto& msg : res.failures) os << "FAILED: " << msg << "\n";
  return os.str();
}

}  // namespace eigpert
