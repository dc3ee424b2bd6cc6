#include "pifit/pi_ops.hpp"

#include <algorithm>

namespace pifit {

IdSet o_upper_pi_ids(const Group& g, const IdSet& h, const PrimeSet& pi) {
  const PrimeSet pip = pi.complement();
  IdSet seed;
  for (ElementId x : h)
    if (pip.is_pi_number(g.element_order(x))) seed.push_back(x);
  return closure_ids(g, seed);
}

std::vector<int> hall_in_indices(const Lattice& lat, int ambient, const PrimeSet& rho) {
  const std::uint64_t target = rho.pi_part(lat.order_of(ambient));
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(lat.size()); ++i)
    if (lat.order_of(i) == target && lat.contains(ambient, i)) out.push_back(i);
  return out;
}

std::vector<int> sylow_in_indices(const Lattice& lat, int ambient, std::uint64_t p) {
  return hall_in_indices(lat, ambient, PrimeSet({static_cast<unsigned>(p)}));
}

bool reduces_into(const IdSet& rho_sub, const IdSet& h, const PrimeSet& rho) {
  return intersect_ids(rho_sub, h).size() == rho.pi_part(h.size());
}

int o_rho_index(const Lattice& lat, const PrimeSet& rho) {
  IdSet acc{lat.group().identity_id()};
  for (int i : lat.normal_indices())
    if (rho.is_pi_number(lat.order_of(i))) acc = join_ids(lat.group(), acc, lat.members(i));
  return lat.index_of(acc);
}

std::vector<int> chief_series_indices(const Lattice& lat) {
  std::vector<int> normals = lat.normal_indices();
  std::vector<int> series{lat.trivial_index()};
  while (series.back() != lat.full_index()) {
    int cur = series.back();
    int next = -1;
    for (int m : normals) {
      if (m != cur && lat.contains(m, cur)) {
        next = m;
        break;
      }
    }
    if (next < 0) throw DomainError("normal lattice has no chief extension");
    series.push_back(next);
  }
  return series;
}

std::vector<int> minimal_normal_indices(const Lattice& lat) {
  std::vector<int> normals = lat.normal_indices();
  std::vector<int> out;
  for (int n : normals) {
    if (n == lat.trivial_index()) continue;
    bool minimal = true;
    for (int m : normals)
      if (m != n && m != lat.trivial_index() && lat.contains(n, m)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(n);
  }
  return out;
}

namespace {

/// Pullback of O_rho(G/cur): join of all normals above cur with rho index.
int pullback_o_rho(const Lattice& lat, int cur, const PrimeSet& rho) {
  IdSet acc = lat.members(cur);
  for (int m : lat.normal_indices()) {
    if (!lat.contains(m, cur)) continue;
    if (rho.is_pi_number(lat.order_of(m) / lat.order_of(cur)))
      acc = join_ids(lat.group(), acc, lat.members(m));
  }
  return lat.index_of(acc);
}

}  // namespace

bool is_pi_separable(const Lattice& lat, const PrimeSet& pi) {
  const PrimeSet pip = pi.complement();
  int cur = lat.trivial_index();
  while (true) {
    int up = pullback_o_rho(lat, cur, pip);
    up = pullback_o_rho(lat, up, pi);
    if (up == cur) break;
    cur = up;
  }
  return cur == lat.full_index();
}

bool is_pi_separable_chief(const Lattice& lat, const PrimeSet& pi) {
  auto series = chief_series_indices(lat);
  const PrimeSet pip = pi.complement();
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    std::uint64_t q = lat.order_of(series[i + 1]) / lat.order_of(series[i]);
    if (!pi.is_pi_number(q) && !pip.is_pi_number(q)) return false;
  }
  return true;
}

bool factor_elementary_abelian(const Group& g, const IdSet& upper, const IdSet& lower,
                               std::uint64_t p) {
  for (ElementId x : upper) {
    ElementId xp = x;
    for (std::uint64_t k = 1; k < p; ++k) xp = g.mul(xp, x);
    if (!id_member(lower, xp)) return false;
  }
  for (ElementId x : upper)
    for (ElementId y : upper) {
      ElementId comm = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
      if (!id_member(lower, comm)) return false;
    }
  return true;
}

bool is_piprime_soluble(const Lattice& lat, const PrimeSet& pi) {
  auto series = chief_series_indices(lat);
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    const IdSet& lower = lat.members(series[i]);
    const IdSet& upper = lat.members(series[i + 1]);
    std::uint64_t q = upper.size() / lower.size();
    if (pi.is_pi_number(q)) continue;
    auto fac = factorize(q);
    if (fac.size() != 1) return false;  // mixed factor: not even separable
    if (!factor_elementary_abelian(lat.group(), upper, lower, fac[0].first)) return false;
  }
  return true;
}

}  // namespace pifit
