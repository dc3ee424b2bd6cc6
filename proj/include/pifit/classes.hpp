#ifndef PIFIT_CLASSES_HPP
#define PIFIT_CLASSES_HPP

#include <string>
#include <vector>

#include "pifit/group.hpp"
#include "pifit/primes.hpp"

namespace pifit {

/// A closed-form group-class predicate. Membership is decidable from element
/// orders within the subgroup: no lattice is required, so the test runs on
/// arbitrary id sets (quotients, lattice members) alike.
///
/// Npi(pi) is the class of groups G = O_pi(G) x O_pi'(G) with nilpotent
/// pi'-part; it degenerates to Nilpotent when |pi| <= 1.
struct ClassSpec {
  enum class Tag { EPi, NPiPrime, Npi, Nilpotent, All, Trivial, Intersection };

  Tag tag = Tag::All;
  PrimeSet pi;                   // parameter of EPi / NPiPrime / Npi
  std::vector<ClassSpec> parts;  // for Intersection

  static ClassSpec e_pi(PrimeSet pi) { return {Tag::EPi, std::move(pi), {}}; }
  static ClassSpec n_piprime(PrimeSet pi) { return {Tag::NPiPrime, std::move(pi), {}}; }
  static ClassSpec npi(PrimeSet pi) { return {Tag::Npi, std::move(pi), {}}; }
  static ClassSpec nilpotent() { return {Tag::Nilpotent, {}, {}}; }
  static ClassSpec all() { return {Tag::All, {}, {}}; }
  static ClassSpec trivial() { return {Tag::Trivial, {}, {}}; }
  static ClassSpec intersection(std::vector<ClassSpec> parts) {
    return {Tag::Intersection, {}, std::move(parts)};
  }

  /// Grammar: npi | epi | npiprime | nilpotent | all | trivial |
  /// epi*npiprime (alias of npi) | a&b (intersection). The pi parameter
  /// comes from the surrounding context (the CLI's --pi flag).
  static ClassSpec parse(std::string_view text, const PrimeSet& pi);

  std::string to_string() const;
};

bool class_membership_ids(const Group& parent, const IdSet& h, const ClassSpec& spec);
bool class_membership(const Group& g, const ClassSpec& spec);

}  // namespace pifit

#endif
