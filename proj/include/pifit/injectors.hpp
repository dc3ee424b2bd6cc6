#ifndef PIFIT_INJECTORS_HPP
#define PIFIT_INJECTORS_HPP

#include <map>
#include <optional>
#include <vector>

#include "pifit/fitting.hpp"

namespace pifit {

enum class InjectorSearch { Auto, Pruned, Unpruned };

/// Exact set {V <= ambient : V ∩ K is F-maximal in K for every subnormal K
/// of ambient}. May be empty when fs is not a Fitting set. Pruned mode
/// restricts candidates to those containing the ambient radical (valid for
/// classically valid sets; Auto picks accordingly).
std::vector<int> injectors_bruteforce_in(PiContext& ctx, const FittingSet& fs, int ambient,
                                         InjectorSearch mode = InjectorSearch::Auto);

struct ConjugacyWitness {
  ElementId g = 0;
  bool in_residual = false;
};

/// Searches the residual first, then the rest of the group.
std::optional<ConjugacyWitness> conjugacy_witness(PiContext& ctx, int v, int vstar);

struct InjectorLevel {
  int ambient = -1;
  int residual = -1;       // K
  int chosen_injector = -1;  // W, injector of K used at this level
  std::vector<int> f_maximal_over_w;
};

struct Lemma28aCheck {
  int injector = -1;
  int projector = -1;  // matching projector P with V = (WP)_F, or -1
  bool applicable = false;
};

struct InjectorReport {
  std::vector<int> injectors;  // sorted lattice indices
  std::map<std::pair<int, int>, ConjugacyWitness> witnesses;
  std::vector<InjectorLevel> trace;  // recursion transcript, outermost first
  std::vector<Lemma28aCheck> radical_product_checks;
};

/// The inductive construction: W an injector of the residual K, then the
/// F-maximal subgroups above W, closed under conjugacy. Requires a
/// pi'-soluble group and an npi-valid Fitting set; aborts with
/// MismatchError if the result disagrees with the brute-force definition.
InjectorReport injectors_constructive(PiContext& ctx, const FittingSet& fs);

struct DnormalIntersectionVerdict {
  int injector = -1;
  int dnormal_subgroup = -1;
  int intersection = -1;
  bool is_injector_of_dnormal = false;
};

/// Theorem-level property: I ∩ N is an injector of N for every Dnormal N.
std::vector<DnormalIntersectionVerdict> dnormal_intersection_check(PiContext& ctx,
                                                                   const FittingSet& fs,
                                                                   const std::vector<int>& injectors);

}  // namespace pifit

#endif
