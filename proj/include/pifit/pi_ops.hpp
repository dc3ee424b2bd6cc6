#ifndef PIFIT_PI_OPS_HPP
#define PIFIT_PI_OPS_HPP

#include <vector>

#include "pifit/lattice.hpp"
#include "pifit/primes.hpp"

namespace pifit {

/// O^pi(H): smallest normal subgroup of H with pi-group quotient, computed
/// as the closure of the pi'-elements of H.
IdSet o_upper_pi_ids(const Group& g, const IdSet& h, const PrimeSet& pi);

/// All Hall rho-subgroups of `ambient` (order = the rho-part of |ambient|).
/// May be empty; never empty when rho is a single prime.
std::vector<int> hall_in_indices(const Lattice& lat, int ambient, const PrimeSet& rho);
std::vector<int> sylow_in_indices(const Lattice& lat, int ambient, std::uint64_t p);

/// G_rho reduces into H: |G_rho ∩ H| equals the rho-part of |H|.
bool reduces_into(const IdSet& rho_sub, const IdSet& h, const PrimeSet& rho);

/// O_rho of the full group: join of all normal rho-subgroups.
int o_rho_index(const Lattice& lat, const PrimeSet& rho);

/// Ascending chain of normal subgroups, each minimal above the previous;
/// deterministic (smallest order, then lexicographic).
std::vector<int> chief_series_indices(const Lattice& lat);

/// Nontrivial normal subgroups minimal under inclusion.
std::vector<int> minimal_normal_indices(const Lattice& lat);

/// Upper pi',pi-series route: alternate pullbacks of O_pi' and O_pi until
/// stable; separable iff the series reaches the full group.
bool is_pi_separable(const Lattice& lat, const PrimeSet& pi);

/// Cross-check route: every chief factor is a pi-group or a pi'-group.
bool is_pi_separable_chief(const Lattice& lat, const PrimeSet& pi);

/// Every chief factor is a pi-group or an elementary abelian p-group with
/// p in pi'.
bool is_piprime_soluble(const Lattice& lat, const PrimeSet& pi);

/// Factor upper/lower has exponent p and is abelian (congruences mod lower).
bool factor_elementary_abelian(const Group& g, const IdSet& upper, const IdSet& lower,
                               std::uint64_t p);

}  // namespace pifit

#endif
