#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arcsym/bigint.hpp"

namespace arcsym {

/// n = ∏ p^f with primes in increasing order.
class FactoredInteger {
 public:
  FactoredInteger() : value_(1) {}
  /// Throws InvalidArgument if a key is not prime or an exponent is zero.
  explicit FactoredInteger(std::map<std::uint64_t, unsigned> factors);

  const std::map<std::uint64_t, unsigned>& factors() const noexcept { return factors_; }
  const BigInt& value() const noexcept { return value_; }
  unsigned exponent(std::uint64_t p) const;
  /// "2^9 * 3^4 * 5 * 7"; "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(const FactoredInteger& a, const FactoredInteger& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::map<std::uint64_t, unsigned> factors_;
  BigInt value_;
};

bool is_prime(std::uint64_t n);
/// Trial division. Throws InvalidArgument for n == 0.
FactoredInteger factorize(std::uint64_t n);
/// Factorizes a BigInt that fits in 64 bits (throws std::overflow_error
/// otherwise).
FactoredInteger factorize(const BigInt& n);
/// π(n), increasing.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// |n|_p, the largest power of p dividing n. Throws unless p is prime, n > 0.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// ∏ p_i^⌈f_i/2⌉.
BigInt half_exponent_divisor(const FactoredInteger& n);

struct PrimePower {
  std::uint64_t p;
  unsigned f;
};
/// (p, f) with a = p^f, or nullopt when a is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t a);

/**
 * ppd(a, m) for a = p^f: primes r dividing p^(fm) - 1 but no p^i - 1 with
 * 0 < i < fm. When (p, fm) = (2, 6) the set is {7} by convention (as
 * primitive divisors it would be empty). Throws InvalidArgument unless a is a
 * prime power and m >= 2; std::overflow_error if p^(fm) exceeds 64 bits.
 */
std::vector<std::uint64_t> ppd(std::uint64_t a, unsigned m);

/// Primes r | a^m - 1 with r not dividing a^i - 1 for 0 < i < m, found by
/// factoring a^m - 1 and testing each prime (a any integer >= 2).
std::vector<std::uint64_t> primitive_prime_divisors(std::uint64_t a, unsigned m);

/**
 * Zsigmondy: a^m - 1 (a >= 2, m >= 2) has a primitive prime divisor except
 * when m = 2 and a + 1 is a power of 2, or (a, m) = (2, 6). Decided from that
 * statement alone, without factoring.
 */
bool zsigmondy_has_ppd(std::uint64_t a, unsigned m);

}  // namespace arcsym
