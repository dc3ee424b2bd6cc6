#include "oracles.hpp"

#include <deque>

namespace pifit::oracles {

std::set<IdSet> naive_all_subgroups(const Group& g) {
  std::set<IdSet> found;
  found.insert(IdSet{g.identity_id()});
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<IdSet> snapshot(found.begin(), found.end());
    for (const auto& h : snapshot) {
      for (ElementId x = 0; x < g.order(); ++x) {
        if (id_member(h, x)) continue;
        IdSet seed = h;
        seed.push_back(x);
        std::sort(seed.begin(), seed.end());
        if (found.insert(closure_ids(g, seed)).second) changed = true;
      }
    }
  }
  return found;
}

bool naive_is_subnormal(const Lattice& lat, int h, int ambient) {
  const Group& g = lat.group();
  // edges i -> k when i is normal in k; reachability means a subnormal chain
  std::deque<int> todo{h};
  std::vector<bool> seen(lat.size(), false);
  seen[h] = true;
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop_front();
    if (cur == ambient) return true;
    for (int k = 0; k < static_cast<int>(lat.size()); ++k) {
      if (seen[k] || !lat.contains(k, cur) || !lat.contains(ambient, k)) continue;
      if (is_normal_in_ids(g, lat.members(cur), lat.gens_of(k))) {
        seen[k] = true;
        todo.push_back(k);
      }
    }
  }
  return false;
}

IdSet naive_o_upper_pi(const Lattice& lat, const PrimeSet& pi) {
  const std::uint64_t n = lat.group().order();
  int best = -1;
  for (int i : lat.normal_indices()) {
    if (!pi.is_pi_number(n / lat.order_of(i))) continue;
    if (best < 0 || lat.order_of(i) < lat.order_of(best)) best = i;
  }
  // minimality: contained in every normal subgroup with pi-group index
  for (int i : lat.normal_indices())
    if (pi.is_pi_number(n / lat.order_of(i)) && !lat.contains(i, best))
      throw DomainError("pi-quotient family has no minimum");
  return lat.members(best);
}

IdSet naive_derived(const Lattice& lat) {
  const Group& g = lat.group();
  for (int i : lat.normal_indices()) {  // ascending order
    bool contains_comms = true;
    for (ElementId a = 0; a < g.order() && contains_comms; ++a)
      for (ElementId b = a; b < g.order(); ++b) {
        ElementId comm = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
        if (!id_member(lat.members(i), comm)) {
          contains_comms = false;
          break;
        }
      }
    if (contains_comms) return lat.members(i);
  }
  throw DomainError("no normal subgroup contains all commutators");
}

}  // namespace pifit::oracles
