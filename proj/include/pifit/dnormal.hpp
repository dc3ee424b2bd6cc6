#ifndef PIFIT_DNORMAL_HPP
#define PIFIT_DNORMAL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pifit/classes.hpp"
#include "pifit/lattice.hpp"
#include "pifit/pi_ops.hpp"
#include "pifit/primes.hpp"
#include "pifit/quotient.hpp"

namespace pifit {

/// Raised when a property the theory guarantees fails computationally;
/// carries a serialized minimal witness. Never swallowed.
struct MismatchError : Error {
  MismatchError(const std::string& what, std::string witness)
      : Error(what + " | witness: " + witness), witness_json(std::move(witness)) {}
  std::string witness_json;
};

/// All relative-normality state for one (group, prime set) pair: the
/// lattice, Sylow lists, O^pi per subgroup, quotients, and memoized
/// predicate matrices. Queries are pure; a context is meant to be used from
/// a single thread (suites parallelize across contexts, not within one).
class PiContext {
 public:
  PiContext(LatticePtr lat, PrimeSet pi);

  const Group& group() const { return lat_->group(); }
  GroupPtr group_ptr() const { return lat_->group_ptr(); }
  const Lattice& lattice() const { return *lat_; }
  LatticePtr lattice_ptr() const { return lat_; }
  const PrimeSet& pi() const { return pi_; }

  int size() const { return static_cast<int>(lat_->size()); }
  int trivial() const { return lat_->trivial_index(); }
  int full() const { return lat_->full_index(); }
  const IdSet& members(int i) const { return lat_->members(i); }
  std::size_t order_of(int i) const { return lat_->order_of(i); }
  bool contains(int a, int i) const { return lat_->contains(a, i); }

  // --- lattice-indexed algebra (memoized where it pays) ---
  int join(int i, int j);
  int intersect(int i, int j);
  int conj_sub(int i, ElementId g);
  int normalizer(int i);  // N_G(S)
  bool normal_in(int i, int a);
  bool subnormal_in(int i, int a);
  int normal_closure_in(int i, int a);
  int core_in(int i, int a);
  int derived(int i);
  int o_upper_pi(int i);  // O^pi as lattice index
  const std::vector<int>& sylows_in(int a, std::uint64_t p);
  std::vector<int> subs_of(int a) const;
  std::vector<int> overs_of(int i) const;

  /// Orbit of a subgroup under conjugation by the full group, as sorted
  /// lattice indices (= its conjugacy class).
  const std::vector<int>& conjugates_of(int i) const {
    return lat_->classes()[lat_->class_of(i)];
  }

  // --- class membership ---
  bool member(int i, const ClassSpec& spec);
  bool npi_member(int i);  // membership in Npi(pi)

  // --- quotients of lattice members ---
  const Quotient& quotient(int num, int ker);
  /// Lattice of a quotient plus Npi membership flags per quotient subgroup.
  struct QuotientLattice {
    QuotientPtr q;
    LatticePtr qlat;
    std::vector<char> npi_member;
  };
  const QuotientLattice& quotient_lattice(int num, int ker);

  // --- dnormality ---

  /// Definition route: per-prime Sylow reduction conditions.
  bool dnormal_def(int h, int a);
  /// Characterization route: normality when |pi| <= 1, otherwise
  /// O^pi(H) normal in A and O^pi(A) <= N_A(H).
  bool dnormal(int h, int a);
  bool dsubnormal(int h, int a);
  /// Witness chain h = c0 <= ... <= a, each Dnormal in the next; empty when
  /// h is not Dsubnormal in a.
  std::vector<int> dsubnormal_chain(int h, int a);
  bool self_dnormalizing(int h);
  /// Maximal proper Dnormal subgroups of the full group; requires the group
  /// to be pi'-soluble.
  std::vector<int> maximal_dnormal_proper();

  // --- pi structure ---
  int residual_in(int a);  // Npi-residual of a lattice member
  int residual() { return residual_in(full()); }
  bool pi_separable();
  bool piprime_soluble();

 private:
  LatticePtr lat_;
  PrimeSet pi_;

  std::vector<int> join_memo_, normalizer_memo_, derived_memo_, oupper_memo_, residual_memo_;
  std::vector<signed char> normal_in_memo_, subnormal_in_memo_, dnormal_memo_, dnormal_def_memo_;
  std::map<std::pair<int, std::uint64_t>, std::vector<int>> sylow_memo_;
  std::map<std::string, std::vector<signed char>> member_memo_;
  std::map<std::pair<int, int>, QuotientPtr> quotient_memo_;
  std::map<std::pair<int, int>, QuotientLattice> quotient_lattice_memo_;
  std::map<int, std::vector<char>> dsub_reach_;
  std::optional<bool> pi_separable_, piprime_soluble_;

  std::size_t at(int i, int a) const { return static_cast<std::size_t>(a) * lat_->size() + i; }
};

}  // namespace pifit

#endif
