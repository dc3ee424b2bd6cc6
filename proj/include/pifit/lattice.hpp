#ifndef PIFIT_LATTICE_HPP
#define PIFIT_LATTICE_HPP

#include <map>
#include <memory>
#include <vector>

#include "pifit/group.hpp"

namespace pifit {

class Lattice;
using LatticePtr = std::shared_ptr<const Lattice>;

/// The complete subgroup lattice of a group, with conjugacy classes and
/// normality/subnormality flags. Built once, immutable, shareable.
///
/// Enumeration is cyclic-extension bottom-up: all cyclic subgroups, then
/// closure under join with cyclic subgroups, deduplicated canonically.
/// Subgroups are sorted by (order, lexicographic member-id set); index 0 is
/// always the trivial subgroup and the last index the full group.
class Lattice {
 public:
  static LatticePtr build(GroupPtr g, std::size_t cap = 1000);

  const Group& group() const { return *parent_; }
  GroupPtr group_ptr() const { return parent_; }

  std::size_t size() const { return subgroups_.size(); }
  const std::vector<IdSet>& subgroups() const { return subgroups_; }
  const IdSet& members(int i) const { return subgroups_[i]; }
  std::size_t order_of(int i) const { return subgroups_[i].size(); }
  const IdSet& gens_of(int i) const { return gens_[i]; }

  int trivial_index() const { return 0; }
  int full_index() const { return static_cast<int>(subgroups_.size()) - 1; }

  /// Index of a canonical member set; throws DomainError if not a subgroup
  /// of the parent.
  int index_of(const IdSet& members) const;

  /// contains(i, j): subgroup i contains subgroup j.
  bool contains(int i, int j) const { return contains_[static_cast<std::size_t>(i) * size() + j]; }

  int class_of(int i) const { return class_of_[i]; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  bool is_normal(int i) const { return normal_[i]; }
  bool is_subnormal(int i) const { return subnormal_[i]; }

  std::vector<int> normal_indices() const;

 private:
  Lattice() = default;

  GroupPtr parent_;
  std::vector<IdSet> subgroups_;
  std::vector<IdSet> gens_;
  std::vector<char> contains_;  // size() * size() bitmatrix
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
  std::vector<bool> normal_;
  std::vector<bool> subnormal_;
  std::map<IdSet, int> index_;
};

// --- ambient-relative structural predicates on id sets ---

bool is_normal_in_ids(const Group& g, const IdSet& h, const IdSet& ambient_gens);
IdSet normal_closure_ids(const Group& g, const IdSet& h, const IdSet& ambient_gens);
IdSet core_ids(const Group& g, const IdSet& h, const IdSet& ambient);

/// Successive normal closures descent: K := <h^K> until stable; subnormal
/// iff the chain reaches h.
bool is_subnormal_ids(const Group& g, const IdSet& h, const IdSet& ambient);

IdSet derived_subgroup_ids(const Group& g, const IdSet& s);

/// True iff every Sylow subgroup is normal, tested by counting p-elements.
bool is_nilpotent_ids(const Group& g, const IdSet& s);
bool is_nilpotent(const Group& g);

}  // namespace pifit

#endif
