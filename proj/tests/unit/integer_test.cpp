#include <gtest/gtest.h>

#include "sfrey/integer.hpp"

namespace sfrey {
namespace {

Int product(const Factorization& f) {
  Int n = 1;
  for (const auto& [p, e] : f) n *= pow(p, e);
  return n;
}

TEST(Integer, FactorSmallAndLarge) {
  EXPECT_EQ(factor_integer(Int(360)), (Factorization{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_TRUE(factor_integer(Int(1)).empty());
  EXPECT_EQ(factor_integer(Int(-12)), (Factorization{{2, 2}, {3, 1}}));
  const Int p1("1000000007");
  const Int p2("998244353");
  const Int p3("4294967291");
  const Factorization f = factor_integer(p1 * p2 * p2 * p3);
  EXPECT_EQ(f, (Factorization{{p2, 2}, {p1, 1}, {p3, 1}}));
}

TEST(Integer, FactorizationReconstitutes) {
  for (long n = 2; n < 3000; ++n) {
    const Factorization f = factor_integer(Int(n));
    EXPECT_EQ(product(f), n);
    for (const auto& [p, e] : f) EXPECT_TRUE(is_prime(p));
  }
}

TEST(Integer, ValuationAndRemoveFactor) {
  EXPECT_EQ(valuation(Int(96), Int(2)), 5u);
  Int n = 1250;
  EXPECT_EQ(remove_factor(n, Int(5)), 4u);
  EXPECT_EQ(n, 2);
}

TEST(Integer, SquareRoots) {
  EXPECT_EQ(isqrt(Int(99)), 9);
  Int r;
  EXPECT_TRUE(is_square(Int(144), &r));
  EXPECT_EQ(r, 12);
  EXPECT_FALSE(is_square(Int(-4)));
  for (long p : {3L, 5L, 13L, 17L, 97L, 1009L}) {
    for (long a = 0; a < p; ++a) {
      const auto s = sqrt_mod(Int(a), Int(p));
      bool residue = false;
      for (long x = 0; x < p; ++x) residue = residue || (x * x) % p == a;
      ASSERT_EQ(s.has_value(), residue) << a << " mod " << p;
      if (s) EXPECT_EQ(mod(*s * *s, Int(p)), a);
    }
  }
}

TEST(Integer, KroneckerMatchesEuler) {
  for (long p : {3L, 7L, 11L, 101L}) {
    for (long a = 1; a < p; ++a) {
      Int e;
      mpz_powm_ui(e.get_mpz_t(), Int(a).get_mpz_t(), static_cast<unsigned long>((p - 1) / 2), Int(p).get_mpz_t());
      EXPECT_EQ(kronecker(Int(a), Int(p)), e == 1 ? 1 : -1);
    }
  }
}

TEST(Integer, DivisorsAndPrimes) {
  EXPECT_EQ(divisors(factor_integer(Int(12))), (std::vector<Int>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(primes_up_to(20), (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19}));
  EXPECT_TRUE(fits_i64(Int("9223372036854775807")));
  EXPECT_FALSE(fits_i64(Int("9223372036854775808")));
}

}  // namespace
}  // namespace sfrey
