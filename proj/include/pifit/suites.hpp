#ifndef PIFIT_SUITES_HPP
#define PIFIT_SUITES_HPP

#include <string>
#include <vector>

#include "pifit/corpus.hpp"
#include "pifit/report.hpp"

namespace pifit {

struct SuiteOptions {
  int jobs = 1;
  bool timing = true;
};

/// Every runnable suite id, in canonical order.
const std::vector<std::string>& all_suite_ids();

/// Expand "all" and prefixes like "lemma-1.4" into concrete ids; throws
/// ParseError for unknown names.
std::vector<std::string> resolve_suite_ids(const std::string& pattern);

/// The standard evaluation prime sets: {}, {2}, {3}, {2,3}, {3,5}, {2,3,5}.
std::vector<PrimeSet> default_pi_sets();

/// Run the given suites over the corpus for each prime set. Results are
/// deterministically ordered by (suite, pi, group, class); execution may be
/// parallel across (group, pi) work items.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& ids, const Corpus& corpus,
                                    const std::vector<PrimeSet>& pis,
                                    const SuiteOptions& opt = {});

}  // namespace pifit

#endif
