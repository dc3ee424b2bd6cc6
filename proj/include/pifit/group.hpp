#ifndef PIFIT_GROUP_HPP
#define PIFIT_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pifit/perm.hpp"

namespace pifit {

using ElementId = std::uint32_t;

/// Sorted vector of element ids; the canonical form of a subgroup.
using IdSet = std::vector<ElementId>;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

struct GenOptions {
  std::size_t order_cap = 10000;
};

/// A finite permutation group with a memoized, canonically sorted element
/// table. Element ids are indices into that table; id 0 is the identity.
/// Immutable after construction and safe to share across threads.
class Group {
 public:
  static GroupPtr generate(std::vector<Perm> generators, std::string name = "",
                           const GenOptions& opt = {});

  static GroupPtr trivial(std::size_t degree = 1, std::string name = "1");

  /// Permutation group on degree(a)+degree(b) points acting independently.
  static GroupPtr direct_product(const Group& a, const Group& b, std::string name = "",
                                 const GenOptions& opt = {});

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(ElementId i) const { return elements_[i]; }
  const IdSet& generator_ids() const { return generator_ids_; }

  ElementId identity_id() const { return 0; }

  std::optional<ElementId> find(const Perm& p) const;
  ElementId id_of(const Perm& p) const;

  /// mul(a, b) = element(a) followed by element(b).
  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const { return inverse_[a]; }
  /// conj(x, g) = g^{-1} x g.
  ElementId conj(ElementId x, ElementId g) const { return mul(mul(inverse_[g], x), g); }
  std::uint64_t element_order(ElementId a) const { return element_order_[a]; }

 private:
  Group() = default;
  void build_tables();

  std::size_t degree_ = 1;
  std::string name_;
  std::vector<Perm> elements_;  // sorted lexicographically by image vector
  IdSet generator_ids_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint32_t> element_order_;
  std::vector<ElementId> mult_;  // order*order flat table, only for small groups
};

/// A subgroup of a fixed parent, canonically identified by its sorted id set.
struct Subgroup {
  GroupPtr parent;
  IdSet members;

  std::size_t order() const { return members.size(); }
  bool operator==(const Subgroup& o) const {
    return parent.get() == o.parent.get() && members == o.members;
  }
};

// --- id-set algebra within one parent group ---

/// Closure of `seed` under multiplication and inverse (the generated subgroup).
IdSet closure_ids(const Group& g, const IdSet& seed);

bool contains_all(const IdSet& outer, const IdSet& inner);
bool id_member(const IdSet& set, ElementId x);

IdSet intersect_ids(const IdSet& a, const IdSet& b);
IdSet join_ids(const Group& g, const IdSet& a, const IdSet& b);
IdSet conjugate_ids(const Group& g, const IdSet& s, ElementId x);

/// N_{ambient}(s); pass the full group id range for N_G(s).
IdSet normalizer_ids(const Group& g, const IdSet& s, const IdSet& ambient);
IdSet full_ids(const Group& g);

/// Small generating set, greedy by largest extension (deterministic).
IdSet small_generating_set(const Group& g, const IdSet& s);

bool is_closed_subgroup(const Group& g, const IdSet& s);

// --- Subgroup-level wrappers (validate shared parents) ---

Subgroup make_subgroup(GroupPtr parent, const std::vector<Perm>& gens);
Subgroup join(const Subgroup& s, const Subgroup& t);
Subgroup intersect(const Subgroup& s, const Subgroup& t);
Subgroup conjugate(const Subgroup& s, const Perm& g);
Subgroup normalizer(const Subgroup& s);
bool is_subgroup_of(const Subgroup& s, const Subgroup& t);

}  // namespace pifit

#endif
