#ifndef PIFIT_FITTING_HPP
#define PIFIT_FITTING_HPP

#include <optional>
#include <string>
#include <vector>

#include "pifit/dnormal.hpp"

namespace pifit {

/// Witness pair for a failed closure axiom.
struct AxiomWitness {
  int s = -1;
  int t = -1;      // second subgroup (join axioms) or the offending subgroup
  int extra = -1;  // join / conjugated image where applicable
};

/// FS1: closed under (D)subnormal descent. FS2: closed under (D)normal
/// joins. FS3: closed under conjugation. Classical flags use
/// normal/subnormal; the npi flags use Dnormal/Dsubnormal.
struct FittingValidation {
  bool fs1_classical = true, fs2_classical = true, fs3 = true;
  bool fs1_npi = true, fs2_npi = true;
  std::optional<AxiomWitness> fs1_classical_witness, fs2_classical_witness, fs3_witness;
  std::optional<AxiomWitness> fs1_npi_witness, fs2_npi_witness;

  bool classical_ok() const { return fs1_classical && fs2_classical && fs3; }
  bool npi_ok() const { return fs1_npi && fs2_npi && fs3; }
};

/// An explicit, conjugation-closed collection of subgroups of one group,
/// as sorted lattice indices.
struct FittingSet {
  enum class Provenance { TraceOfClass, Explicit, ClosureOfSeed };

  std::vector<int> members;  // sorted lattice indices
  Provenance provenance = Provenance::Explicit;
  std::string label;
  std::optional<ClassSpec> source_class;
  FittingValidation validation;

  bool has(int idx) const;
};

/// Members = all lattice subgroups belonging to the class.
FittingSet trace(PiContext& ctx, const ClassSpec& spec);

FittingSet explicit_fitting_set(PiContext& ctx, std::vector<int> members, std::string label);

/// Least fixpoint of the three closure rules over the seed: Dsubnormal
/// descent, Dnormal joins, conjugation.
FittingSet fitting_set_closure(PiContext& ctx, const std::vector<int>& seed);

FittingValidation validate_fitting_set(PiContext& ctx, const std::vector<int>& members);

/// Join of all normal members of fs inside `ambient`. Requires a
/// classically valid Fitting set.
int radical_in(PiContext& ctx, const FittingSet& fs, int ambient);

/// The four characterizations of the radical: joins of the normal,
/// subnormal, Dnormal and Dsubnormal members. They agree for npi-valid
/// Fitting sets; computed independently so suites can compare them.
struct RadicalRoutes {
  int normal_join, subnormal_join, dnormal_join, dsubnormal_join;
};
RadicalRoutes radical_routes(PiContext& ctx, const FittingSet& fs, int ambient);

/// Members contained in `ambient`, maximal under inclusion among those.
std::vector<int> f_maximal_in(PiContext& ctx, const FittingSet& fs, int ambient);

/// Instance-level check of the two class closure axioms over every
/// subgroup of every corpus group. Returns the first counterexample found
/// (deterministically) or nothing.
struct ClassCounterexample {
  std::string group_name;
  int ambient;      // the subgroup playing the role of the whole group
  int m, n;         // axiom (ii): Dnormal members generating `ambient`
  bool axiom_i;     // true if axiom (i) failed instead (then m = member, n = -1)
};
std::optional<ClassCounterexample> validate_npi_fitting_class(
    const std::vector<std::pair<std::string, std::shared_ptr<PiContext>>>& corpus_ctxs,
    const ClassSpec& spec);

}  // namespace pifit

#endif
