#include "pifit/primes.hpp"

#include <algorithm>
#include <sstream>

namespace pifit {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

namespace {
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}
}  // namespace

PrimeSet::PrimeSet(std::vector<unsigned> primes, bool complemented)
    : primes_(std::move(primes)), complemented_(complemented) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (unsigned p : primes_)
    if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not prime");
}

PrimeSet PrimeSet::parse(std::string_view text) {
  std::vector<unsigned> primes;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    auto b = token.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    auto e = token.find_last_not_of(" \t");
    token = token.substr(b, e - b + 1);
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(token, &pos);
    } catch (const std::exception&) {
      throw ParseError("malformed prime list entry: '" + token + "'");
    }
    if (pos != token.size()) throw ParseError("malformed prime list entry: '" + token + "'");
    primes.push_back(static_cast<unsigned>(v));
  }
  return PrimeSet(std::move(primes));
}

PrimeSet PrimeSet::complement() const {
  PrimeSet out = *this;
  out.complemented_ = !complemented_;
  return out;
}

bool PrimeSet::contains(std::uint64_t p) const {
  bool in = p <= 0xffffffffULL &&
            std::binary_search(primes_.begin(), primes_.end(), static_cast<unsigned>(p));
  return complemented_ ? !in : in;
}

bool PrimeSet::is_pi_number(std::uint64_t n) const {
  for (const auto& [p, e] : factorize(n))
    if (!contains(p)) return false;
  return true;
}

std::uint64_t PrimeSet::pi_part(std::uint64_t n) const {
  std::uint64_t out = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (!contains(p)) continue;
    for (unsigned k = 0; k < e; ++k) out *= p;
  }
  return out;
}

std::string PrimeSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) out << ',';
    out << primes_[i];
  }
  out << '}';
  if (complemented_) out << '\'';
  return out.str();
}

}  // namespace pifit
