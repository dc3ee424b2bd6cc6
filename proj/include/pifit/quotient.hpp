#ifndef PIFIT_QUOTIENT_HPP
#define PIFIT_QUOTIENT_HPP

#include <memory>
#include <vector>

#include "pifit/group.hpp"

namespace pifit {

/// numerator/kernel realized as the permutation action on right cosets of
/// the kernel (faithful and regular because the kernel is normal in the
/// numerator). Both id sets live in one parent group; the quotient gets its
/// own canonical element table plus projection/section maps.
class Quotient {
 public:
  static constexpr ElementId kNotMember = static_cast<ElementId>(-1);

  /// Throws DomainError if kernel is not normal in numerator.
  Quotient(GroupPtr parent, IdSet numerator, IdSet kernel);

  const Group& parent() const { return *parent_; }
  const IdSet& numerator() const { return numerator_; }
  const IdSet& kernel() const { return kernel_; }
  const Group& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }

  /// Projection of a numerator element; kNotMember outside the numerator.
  ElementId image_of(ElementId parent_elem) const { return proj_[parent_elem]; }

  /// Image of a subgroup of the numerator.
  IdSet image_ids(const IdSet& sub) const;

  /// Full preimage in the parent of a subgroup of the quotient.
  IdSet preimage_ids(const IdSet& qsub) const;

 private:
  GroupPtr parent_;
  IdSet numerator_, kernel_;
  GroupPtr group_;
  std::vector<ElementId> proj_;  // parent element id -> quotient element id
};

using QuotientPtr = std::shared_ptr<const Quotient>;

}  // namespace pifit

#endif
