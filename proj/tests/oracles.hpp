#ifndef PIFIT_TEST_ORACLES_HPP
#define PIFIT_TEST_ORACLES_HPP

#include <set>
#include <vector>

#include "pifit/lattice.hpp"
#include "pifit/primes.hpp"

// Test-only oracles, deliberately independent of the implementation paths
// they check.

namespace pifit::oracles {

/// Fixpoint of single-element extensions starting from the trivial
/// subgroup (vs. the cyclic-extension enumeration in Lattice::build).
std::set<IdSet> naive_all_subgroups(const Group& g);

/// Explicit chain search over the pairwise normal-in relation
/// (vs. the successive-normal-closure descent).
bool naive_is_subnormal(const Lattice& lat, int h, int ambient);

/// Minimum-order normal subgroup with pi-group quotient, verified to be
/// contained in every other such normal subgroup
/// (vs. generation by pi'-elements).
IdSet naive_o_upper_pi(const Lattice& lat, const PrimeSet& pi);

/// Smallest normal subgroup containing all commutators
/// (vs. commutator closure).
IdSet naive_derived(const Lattice& lat);

}  // namespace pifit::oracles

#endif
