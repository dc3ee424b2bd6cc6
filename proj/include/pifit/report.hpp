#ifndef PIFIT_REPORT_HPP
#define PIFIT_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "pifit/group.hpp"
#include "pifit/primes.hpp"

namespace pifit {

using Json = nlohmann::ordered_json;

enum class SuiteStatus { Pass, Fail, SkippedHypothesis };

std::string to_string(SuiteStatus s);

struct SuiteScope {
  std::string group;  // group name, or "corpus" for corpus-level suites
  PrimeSet pi;
  std::string class_label;  // optional Fitting-set / class-spec label
};

struct SuiteResult {
  std::string suite;
  SuiteScope scope;
  SuiteStatus status = SuiteStatus::Pass;
  std::vector<Json> witnesses;
  double timing_ms = 0.0;
};

/// Schema: {suite, scope{group,pi,class}, status, witnesses[], timing_ms}.
/// Matches schemas/report.schema.json.
Json suite_result_json(const SuiteResult& r);

/// Canonical machine-recoverable form: order plus a small generating set
/// whose closure regenerates exactly this subgroup.
Json subgroup_json(const Group& g, const IdSet& members);
std::string subgroup_brief(const Group& g, const IdSet& members);

Json pi_json(const PrimeSet& pi);

}  // namespace pifit

#endif
