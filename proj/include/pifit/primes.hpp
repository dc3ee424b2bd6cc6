#ifndef PIFIT_PRIMES_HPP
#define PIFIT_PRIMES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pifit/group.hpp"

namespace pifit {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// A finite set of primes pi, or formally its complement pi'.
class PrimeSet {
 public:
  PrimeSet() = default;
  explicit PrimeSet(std::vector<unsigned> primes, bool complemented = false);

  /// Parse a comma list like "2,3"; the empty string is the empty set.
  static PrimeSet parse(std::string_view text);

  bool complemented() const { return complemented_; }
  PrimeSet complement() const;

  bool contains(std::uint64_t p) const;
  std::size_t explicit_size() const { return primes_.size(); }
  const std::vector<unsigned>& explicit_primes() const { return primes_; }

  /// true iff every prime divisor of n lies in the set; 1 counts vacuously.
  bool is_pi_number(std::uint64_t n) const;

  /// Largest divisor of n all of whose prime factors lie in the set.
  std::uint64_t pi_part(std::uint64_t n) const;

  std::string to_string() const;  // "{2,3}", "{}", "{2,3}'"

  bool operator==(const PrimeSet&) const = default;

 private:
  std::vector<unsigned> primes_;  // sorted, unique
  bool complemented_ = false;
};

}  // namespace pifit

#endif
