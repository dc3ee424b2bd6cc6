#include "pifit/quotient.hpp"

#include <algorithm>
#include <map>

#include "pifit/lattice.hpp"

namespace pifit {

Quotient::Quotient(GroupPtr parent, IdSet numerator, IdSet kernel)
    : parent_(std::move(parent)), numerator_(std::move(numerator)), kernel_(std::move(kernel)) {
  const Group& g = *parent_;
  if (!contains_all(numerator_, kernel_)) throw DomainError("kernel not contained in numerator");
  if (!is_normal_in_ids(g, kernel_, small_generating_set(g, numerator_)))
    throw DomainError("kernel is not normal in numerator");

  // right cosets K\N, numbered by ascending minimal representative
  const std::size_t m = numerator_.size() / kernel_.size();
  std::vector<ElementId> coset_of(g.order(), kNotMember);
  std::vector<ElementId> reps;
  for (ElementId x : numerator_) {
    if (coset_of[x] != kNotMember) continue;
    ElementId c = static_cast<ElementId>(reps.size());
    reps.push_back(x);
    for (ElementId k : kernel_) coset_of[g.mul(k, x)] = c;
  }
  if (reps.size() != m) throw DomainError("coset enumeration mismatch");

  auto action = [&](ElementId x) {
    std::vector<Point> img(m);
    for (std::size_t c = 0; c < m; ++c) img[c] = static_cast<Point>(coset_of[g.mul(reps[c], x)]);
    return Perm(std::move(img));
  };

  std::vector<Perm> qgens;
  for (ElementId x : small_generating_set(g, numerator_)) qgens.push_back(action(x));
  if (qgens.empty()) qgens.push_back(Perm::identity(std::max<std::size_t>(m, 1)));
  group_ = Group::generate(std::move(qgens), "", GenOptions{.order_cap = m});
  if (group_->order() != m) throw DomainError("quotient action has wrong order");

  proj_.assign(g.order(), kNotMember);
  for (ElementId x : numerator_) proj_[x] = group_->id_of(action(x));
}

IdSet Quotient::image_ids(const IdSet& sub) const {
  IdSet out;
  out.reserve(sub.size());
  for (ElementId x : sub) {
    if (proj_[x] == kNotMember) throw DomainError("element outside numerator");
    out.push_back(proj_[x]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IdSet Quotient::preimage_ids(const IdSet& qsub) const {
  IdSet out;
  for (ElementId x : numerator_)
    if (id_member(qsub, proj_[x])) out.push_back(x);
  return out;
}

}  // namespace pifit
