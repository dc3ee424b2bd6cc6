#ifndef PIFIT_PERM_HPP
#define PIFIT_PERM_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pifit {

/// Points are 0-based internally; all I/O (cycle notation) is 1-based.
using Point = std::uint16_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text (cycle notation, corpus files, command flags).
struct ParseError : Error {
  using Error::Error;
};

/// A configured size cap was exceeded (group order, lattice order).
struct CapError : Error {
  using Error::Error;
};

/// Structural misuse: mixed parents, non-member element, non-normal kernel.
struct DomainError : Error {
  using Error::Error;
};

/// A permutation of {0, ..., degree-1}, stored as its image vector.
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);

  std::size_t degree() const { return img_.size(); }

  Point operator[](Point i) const { return img_[i]; }

  const std::vector<Point>& images() const { return img_; }

  /// Apply *this first, then q.
  Perm then(const Perm& q) const;

  Perm inverse() const;

  bool is_identity() const;

  /// Multiplicative order: lcm of cycle lengths.
  std::uint64_t order() const;

  auto operator<=>(const Perm&) const = default;

  /// Disjoint-cycle notation over 1-based points; "()" for the identity.
  std::string to_cycles() const;

 private:
  std::vector<Point> img_;
};

/// Parse disjoint-cycle notation, e.g. "(1 2 3)(4 5)"; "()" is the identity.
/// Every point must lie in 1..degree and appear at most once.
Perm parse_perm(std::string_view text, std::size_t degree);

}  // namespace pifit

#endif
