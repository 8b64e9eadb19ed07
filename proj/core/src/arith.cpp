#include "arcsym/arith.hpp"

#include <limits>
#include <stdexcept>

#include "arcsym/error.hpp"

namespace arcsym {

namespace {

std::uint64_t checked_pow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw std::overflow_error("integer power exceeds 64 bits");
    }
    r *= base;
  }
  return r;
}

// a^e mod r with 128-bit intermediates.
std::uint64_t pow_mod(std::uint64_t a, unsigned e, std::uint64_t r) {
  using boost::multiprecision::uint128_t;
  uint128_t result = 1 % r;
  uint128_t b = a % r;
  while (e > 0) {
    if (e & 1U) result = result * b % r;
    b = b * b % r;
    e >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace

FactoredInteger::FactoredInteger(std::map<std::uint64_t, unsigned> factors)
    : factors_(std::move(factors)), value_(1) {
  for (const auto& [p, f] : factors_) {
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    if (f == 0) throw InvalidArgument("zero exponent for prime " + std::to_string(p));
    BigInt pp = 1;
    for (unsigned i = 0; i < f; ++i) pp *= p;
    value_ *= pp;
  }
}

unsigned FactoredInteger::exponent(std::uint64_t p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

std::string FactoredInteger::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [p, f] : factors_) {
    if (!out.empty()) out += " * ";
    out += std::to_string(p);
    if (f > 1) out += "^" + std::to_string(f);
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FactoredInteger factorize(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("factorize: n must be positive");
  std::map<std::uint64_t, unsigned> f;
  for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  }
  if (n > 1) ++f[n];
  return FactoredInteger(std::move(f));
}

FactoredInteger factorize(const BigInt& n) { return factorize(to_u64(n)); }

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  const FactoredInteger fn = factorize(n);
  std::vector<std::uint64_t> out;
  for (const auto& [p, f] : fn.factors()) out.push_back(p);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw InvalidArgument("p_part: n must be positive");
  if (!is_prime(p)) throw InvalidArgument("p_part: " + std::to_string(p) + " is not prime");
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

BigInt half_exponent_divisor(const FactoredInteger& n) {
  BigInt r = 1;
  for (const auto& [p, f] : n.factors()) {
    for (unsigned i = 0; i < (f + 1) / 2; ++i) r *= p;
  }
  return r;
}

std::optional<PrimePower> as_prime_power(std::uint64_t a) {
  if (a < 2) return std::nullopt;
  const auto f = factorize(a).factors();
  if (f.size() != 1) return std::nullopt;
  return PrimePower{f.begin()->first, f.begin()->second};
}

std::vector<std::uint64_t> primitive_prime_divisors(std::uint64_t a, unsigned m) {
  if (a < 2) throw InvalidArgument("primitive_prime_divisors: a must be at least 2");
  if (m < 1) throw InvalidArgument("primitive_prime_divisors: m must be positive");
  const std::uint64_t n = checked_pow(a, m) - 1;
  const FactoredInteger fn = factorize(n);
  std::vector<std::uint64_t> out;
  for (const auto& [r, f] : fn.factors()) {
    bool primitive = true;
    for (unsigned i = 1; i < m && primitive; ++i) {
      if (pow_mod(a, i, r) == 1) primitive = false;
    }
    if (primitive) out.push_back(r);
  }
  return out;
}

std::vector<std::uint64_t> ppd(std::uint64_t a, unsigned m) {
  if (m < 2) throw InvalidArgument("ppd: m must be at least 2");
  const auto pp = as_prime_power(a);
  if (!pp) throw InvalidArgument("ppd: " + std::to_string(a) + " is not a prime power");
  const unsigned fm = pp->f * m;
  if (pp->p == 2 && fm == 6) return {7};
  return primitive_prime_divisors(pp->p, fm);
}

bool zsigmondy_has_ppd(std::uint64_t a, unsigned m) {
  if (a < 2 || m < 2) throw InvalidArgument("zsigmondy_has_ppd: need a >= 2 and m >= 2");
  if (a == 2 && m == 6) return false;
  if (m == 2) {
    const std::uint64_t b = a + 1;
    if ((b & (b - 1)) == 0) return false;
  }
  return true;
}

}  // namespace arcsym
