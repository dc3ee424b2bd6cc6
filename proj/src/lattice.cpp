#include "pifit/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pifit/primes.hpp"

namespace pifit {

LatticePtr Lattice::build(GroupPtr g, std::size_t cap) {
  if (g->order() > cap)
    throw CapError("group order " + std::to_string(g->order()) + " exceeds lattice cap " +
                   std::to_string(cap));
  auto lat = std::shared_ptr<Lattice>(new Lattice());
  lat->parent_ = g;

  std::map<IdSet, int> index;
  std::vector<IdSet> subs;
  auto add = [&](IdSet s) -> bool {
    if (index.count(s)) return false;
    index.emplace(s, static_cast<int>(subs.size()));
    subs.push_back(std::move(s));
    return true;
  };

  add(IdSet{g->identity_id()});
  std::vector<IdSet> cyclics;
  {
    std::set<IdSet> seen;
    for (ElementId x = 0; x < g->order(); ++x) {
      IdSet c = closure_ids(*g, IdSet{x});
      if (seen.insert(c).second) cyclics.push_back(c);
    }
  }
  std::deque<IdSet> work;
  for (const auto& c : cyclics)
    if (add(c)) work.push_back(c);
  while (!work.empty()) {
    IdSet h = std::move(work.front());
    work.pop_front();
    for (const auto& c : cyclics) {
      if (contains_all(h, c)) continue;
      IdSet j = join_ids(*g, h, c);
      if (add(j)) work.push_back(j);
    }
  }

  std::sort(subs.begin(), subs.end(), [](const IdSet& a, const IdSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  lat->subgroups_ = std::move(subs);
  const std::size_t n = lat->subgroups_.size();
  lat->index_.clear();
  for (std::size_t i = 0; i < n; ++i) lat->index_.emplace(lat->subgroups_[i], static_cast<int>(i));

  lat->gens_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    lat->gens_[i] = small_generating_set(*g, lat->subgroups_[i]);

  lat->contains_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lat->subgroups_[j].size() <= lat->subgroups_[i].size() &&
          contains_all(lat->subgroups_[i], lat->subgroups_[j]))
        lat->contains_[i * n + j] = 1;

  // conjugacy classes: orbits under conjugation by the parent's generators
  lat->class_of_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (lat->class_of_[i] >= 0) continue;
    int cls = static_cast<int>(lat->classes_.size());
    std::vector<int> orbit;
    std::deque<int> todo{static_cast<int>(i)};
    lat->class_of_[i] = cls;
    while (!todo.empty()) {
      int cur = todo.front();
      todo.pop_front();
      orbit.push_back(cur);
      for (ElementId x : g->generator_ids()) {
        IdSet conj = conjugate_ids(*g, lat->subgroups_[cur], x);
        int idx = lat->index_.at(conj);
        if (lat->class_of_[idx] < 0) {
          lat->class_of_[idx] = cls;
          todo.push_back(idx);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    lat->classes_.push_back(std::move(orbit));
  }

  lat->normal_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    lat->normal_[i] = lat->classes_[lat->class_of_[i]].size() == 1;

  lat->subnormal_.resize(n);
  IdSet full = lat->subgroups_.back();
  for (std::size_t i = 0; i < n; ++i)
    lat->subnormal_[i] = is_subnormal_ids(*g, lat->subgroups_[i], full);

  return lat;
}

int Lattice::index_of(const IdSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) throw DomainError("id set is not a subgroup of this lattice's parent");
  return it->second;
}

std::vector<int> Lattice::normal_indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (normal_[i]) out.push_back(static_cast<int>(i));
  return out;
}

// --- relative predicates ---

bool is_normal_in_ids(const Group& g, const IdSet& h, const IdSet& ambient_gens) {
  for (ElementId x : ambient_gens)
    if (conjugate_ids(g, h, x) != h) return false;
  return true;
}

IdSet normal_closure_ids(const Group& g, const IdSet& h, const IdSet& ambient_gens) {
  IdSet cur = h;
  while (true) {
    IdSet next = cur;
    for (ElementId x : ambient_gens) next = join_ids(g, next, conjugate_ids(g, cur, x));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

IdSet core_ids(const Group& g, const IdSet& h, const IdSet& ambient) {
  IdSet cur = h;
  for (ElementId x : ambient) {
    cur = intersect_ids(cur, conjugate_ids(g, h, x));
    if (cur.size() == 1) break;
  }
  return cur;
}

bool is_subnormal_ids(const Group& g, const IdSet& h, const IdSet& ambient) {
  IdSet k = ambient;
  while (true) {
    if (k == h) return true;
    IdSet kgens = small_generating_set(g, k);
    IdSet next = normal_closure_ids(g, h, kgens);
    if (next == k) return false;  // stabilized above h
    k = std::move(next);
  }
}

IdSet derived_subgroup_ids(const Group& g, const IdSet& s) {
  std::set<ElementId> comms;
  for (ElementId a : s)
    for (ElementId b : s)
      comms.insert(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  IdSet seed(comms.begin(), comms.end());
  return closure_ids(g, seed);
}

bool is_nilpotent_ids(const Group& g, const IdSet& s) {
  const auto n = static_cast<std::uint64_t>(s.size());
  for (const auto& [p, e] : factorize(n)) {
    std::uint64_t ppart = 1;
    for (unsigned k = 0; k < e; ++k) ppart *= p;
    std::uint64_t cnt = 0;
    for (ElementId x : s) {
      std::uint64_t o = g.element_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) ++cnt;
    }
    if (cnt != ppart) return false;
  }
  return true;
}

bool is_nilpotent(const Group& g) { return is_nilpotent_ids(g, full_ids(g)); }

}  // namespace pifit
