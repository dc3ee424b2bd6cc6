#include "pifit/report.hpp"

#include <sstream>

namespace pifit {

std::string to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::Pass:
      return "pass";
    case SuiteStatus::Fail:
      return "fail";
    case SuiteStatus::SkippedHypothesis:
      return "skipped-hypothesis";
  }
  return "?";
}

Json pi_json(const PrimeSet& pi) {
  Json arr = Json::array();
  for (unsigned p : pi.explicit_primes()) arr.push_back(p);
  return arr;
}

Json suite_result_json(const SuiteResult& r) {
  Json scope;
  scope["group"] = r.scope.group;
  scope["pi"] = pi_json(r.scope.pi);
  if (!r.scope.class_label.empty()) scope["class"] = r.scope.class_label;
  Json out;
  out["suite"] = r.suite;
  out["scope"] = scope;
  out["status"] = to_string(r.status);
  out["witnesses"] = r.witnesses;
  out["timing_ms"] = r.timing_ms;
  return out;
}

Json subgroup_json(const Group& g, const IdSet& members) {
  Json gens = Json::array();
  for (ElementId x : small_generating_set(g, members)) gens.push_back(g.element(x).to_cycles());
  Json out;
  out["order"] = members.size();
  out["generators"] = gens;
  return out;
}

std::string subgroup_brief(const Group& g, const IdSet& members) {
  std::ostringstream out;
  out << "<";
  bool first = true;
  for (ElementId x : small_generating_set(g, members)) {
    if (!first) out << ", ";
    out << g.element(x).to_cycles();
    first = false;
  }
  if (first) out << "()";
  out << "> of order " << members.size();
  return out.str();
}

}  // namespace pifit
