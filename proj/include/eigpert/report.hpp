#pragma once

#include <string>
#include <vector>

#include "eigpert/bounds.hpp"
#include "eigpert/eigenstructure.hpp"
#include "eigpert/fuzz.hpp"

namespace eigpert {

enum class Format { Text, Json };

/// One named verification shown in a bound report.
struct Check {
  std::string name;
  bool holds = false;
  std::string detail;
};

/// Every check derived from a bound report: the improved bound, the
/// |Λ(C)| + d(C) <= n relation, the S1/S2 split, the empty-S1 case, each
/// geometric-multiplicity drop, the derogatory-index lower bound, and, when
/// their hypotheses hold, the rank-one and nonderogatory checks.
std::vector<Check> bound_checks(const BoundReport& report);

std::string render_analysis(const ExactMatrix& m, const EigenstructureSummary& s, Format format);
std::string render_bound(const BoundReport& report, Format format);
std::string render_split(const SplitReport& report, Format format);
/// JSON body excludes elapsed time so equal campaigns print equal bytes.
std::string render_fuzz(const FuzzConfig& config, const FuzzReport& report, Format format);
std::string render_examples(const ExampleSuiteResult& result, Format format);

}  // namespace eigpert
