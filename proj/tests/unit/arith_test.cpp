#include <gtest/gtest.h>

#include "arcsym/arith.hpp"
#include "arcsym/error.hpp"
#include "oracles.hpp"

using namespace arcsym;

TEST(Arith, FactorizeRecomposes) {
  for (std::uint64_t n = 1; n < 5000; ++n) {
    const FactoredInteger f = factorize(n);
    EXPECT_EQ(f.value(), BigInt(n));
    for (const auto& [p, e] : f.factors()) {
      EXPECT_TRUE(oracle::prime(p));
      EXPECT_GT(e, 0u);
    }
    EXPECT_EQ(is_prime(n), oracle::prime(n));
  }
  EXPECT_EQ(factorize(1451520).to_string(), "2^9 * 3^4 * 5 * 7");
  EXPECT_EQ(factorize(1).to_string(), "1");
  EXPECT_THROW(factorize(0), InvalidArgument);
  EXPECT_THROW(FactoredInteger(std::map<std::uint64_t, unsigned>{{4, 1}}), InvalidArgument);
}

TEST(Arith, PrimePartsAndPrimeDivisors) {
  EXPECT_EQ(p_part(1451520, 2), 512u);
  EXPECT_EQ(p_part(1451520, 3), 81u);
  EXPECT_EQ(p_part(35, 2), 1u);
  EXPECT_EQ(prime_divisors(1451520), (std::vector<std::uint64_t>{2, 3, 5, 7}));
}

// The least d with n | d^2 is ∏ p^⌈f/2⌉; find it by scanning divisors.
TEST(Arith, HalfExponentDivisorIsLeastSquareRootMultiple) {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    std::uint64_t least = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0 && (d * d) % n == 0) { least = d; break; }
    }
    EXPECT_EQ(half_exponent_divisor(factorize(n)), BigInt(least)) << n;
  }
}

TEST(Arith, KnownDivisors) {
  const BigInt sp = half_exponent_divisor(factorize(1451520));
  EXPECT_EQ(sp, 10080);
  EXPECT_EQ(factorize(sp).to_string(), "2^5 * 3^2 * 5 * 7");
  const BigInt he = half_exponent_divisor(FactoredInteger({{2, 9}, {3, 2}, {5, 2}, {17, 1}}));
  EXPECT_EQ(he, 8160);
  EXPECT_EQ(factorize(he).to_string(), "2^5 * 3 * 5 * 17");
}

TEST(Arith, PrimitivePrimeDivisorsMatchIndependentSearch) {
  for (std::uint64_t a = 2; a <= 16; ++a) {
    for (unsigned m = 2; m <= 10; ++m) {
      const auto expected = oracle::primitive_divisors(a, m);
      EXPECT_EQ(primitive_prime_divisors(a, m), expected) << a << "," << m;
      EXPECT_EQ(zsigmondy_has_ppd(a, m), !expected.empty()) << a << "," << m;
    }
  }
}

TEST(Arith, PpdConvention) {
  EXPECT_EQ(ppd(2, 6), (std::vector<std::uint64_t>{7}));
  EXPECT_EQ(ppd(2, 4), (std::vector<std::uint64_t>{5}));
  EXPECT_EQ(ppd(4, 3), (std::vector<std::uint64_t>{7}));
  EXPECT_EQ(ppd(8, 2), (std::vector<std::uint64_t>{7}));
  EXPECT_EQ(ppd(3, 4), (std::vector<std::uint64_t>{5}));
  EXPECT_FALSE(zsigmondy_has_ppd(7, 2));
  EXPECT_FALSE(zsigmondy_has_ppd(2, 6));
  EXPECT_THROW(ppd(6, 2), InvalidArgument);
  EXPECT_THROW(ppd(2, 1), InvalidArgument);
}

TEST(Arith, PpdCongruence) {
  for (std::uint64_t q = 2; q <= 16; ++q) {
    const auto pp = as_prime_power(q);
    if (!pp) continue;
    for (unsigned m = 2; m <= 10; ++m) {
      const unsigned fm = pp->f * m;
      for (auto r : ppd(q, m)) {
        EXPECT_EQ(r % fm, 1u) << q << "," << m << ": " << r;
        EXPECT_GT(r, fm);
      }
    }
  }
  EXPECT_FALSE(as_prime_power(12).has_value());
  EXPECT_EQ(as_prime_power(27)->f, 3u);
}
