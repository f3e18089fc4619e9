#include <gtest/gtest.h>

#include "sfrey/class_group.hpp"
#include "sfrey/errors.hpp"
#include "support/oracles.hpp"

namespace sfrey {
namespace {

TEST(ClassGroup, SpecExamples) {
  EXPECT_EQ(class_group(QuadField::rationals()).h, 1u);
  const IdealClassGroup g5 = class_group(QuadField::make(-5));
  EXPECT_EQ(g5.h, 2u);
  EXPECT_EQ(g5.forms[0], (QuadraticForm{1, 0, 5}));
  EXPECT_EQ(g5.forms[1], (QuadraticForm{2, 2, 3}));
  EXPECT_EQ(class_group(QuadField::make(-23)).h, 3u);
  EXPECT_THROW(class_group(QuadField::make(10)), Error);
}

TEST(ClassGroup, ClassNumbersMatchReducedFormCount) {
  for (std::int64_t d = -1; d >= -300; --d) {
    if (!is_squarefree(d)) continue;
    const QuadField k = QuadField::make(d);
    EXPECT_EQ(class_group(k).h, testing::reduced_form_count(to_i64(k.disc()))) << "d = " << d;
  }
  EXPECT_EQ(class_group(QuadField::make(-163)).h, 1u);
  EXPECT_EQ(class_group(QuadField::make(-47)).h, 5u);
  EXPECT_EQ(class_group(QuadField::make(-14)).h, 4u);
}

TEST(ClassGroup, TableIsAbelianGroup) {
  for (std::int64_t d : {-5L, -14L, -21L, -23L, -47L, -105L, -161L}) {
    const IdealClassGroup g = class_group(QuadField::make(d));
    const std::size_t h = g.h;
    for (std::size_t a = 0; a < h; ++a) {
      EXPECT_EQ(g.table[a][g.identity()], a);
      EXPECT_EQ(g.table[a][g.inverse(a)], g.identity());
      for (std::size_t b = 0; b < h; ++b) {
        EXPECT_EQ(g.table[a][b], g.table[b][a]);
        for (std::size_t c = 0; c < h; ++c) EXPECT_EQ(g.table[g.table[a][b]][c], g.table[a][g.table[b][c]]);
      }
    }
  }
}

TEST(ClassGroup, IdealClassOf) {
  const QuadField k = QuadField::make(-5);
  const IdealClassGroup g = class_group(k);
  EXPECT_EQ(ideal_class_of(k, principal_ideal(k, AlgInt(7)), g), g.identity());
  const IdealHNF m = ideal_from_generators(k, std::vector<AlgInt>{AlgInt(3), k.elem(1, 1)});
  EXPECT_NE(ideal_class_of(k, m, g), g.identity());
  EXPECT_EQ(ideal_class_of(k, ideal_mul(k, m, m), g), g.identity());
  EXPECT_EQ(ideal_class_of(k, principal_ideal(k, k.elem(1, 1)), g), g.identity());
}

TEST(ClassGroup, ClassOfProductIsProductOfClasses) {
  for (std::int64_t d : {-23L, -47L, -14L, -65L}) {
    const QuadField k = QuadField::make(d);
    const IdealClassGroup g = class_group(k);
    const auto primes = primes_up_to_norm(k, 60);
    for (const PrimeIdeal& a : primes) {
      for (const PrimeIdeal& b : primes) {
        const std::size_t ca = ideal_class_of(k, a.hnf, g);
        const std::size_t cb = ideal_class_of(k, b.hnf, g);
        EXPECT_EQ(ideal_class_of(k, ideal_mul(k, a.hnf, b.hnf), g), g.table[ca][cb]);
      }
    }
    // representatives land in their own class
    for (std::size_t c = 0; c < g.h; ++c) EXPECT_EQ(ideal_class_of(k, g.representatives[c], g), c);
  }
}

TEST(ClassGroup, PrincipalityMatchesGeneratorExistence) {
  const QuadField k = QuadField::make(-23);
  const IdealClassGroup g = class_group(k);
  for (const PrimeIdeal& p : primes_up_to_norm(k, 200)) {
    bool has_generator = false;
    for (const AlgInt& x : k.elements_of_norm(p.norm())) has_generator = has_generator || ideal_contains(p.hnf, x);
    EXPECT_EQ(ideal_class_of(k, p.hnf, g) == g.identity(), has_generator);
  }
}

TEST(SmallestPrimeInClass, SpecExamples) {
  const QuadField k5 = QuadField::make(-5);
  const IdealClassGroup g5 = class_group(k5);
  const PrimeIdeal m = smallest_prime_in_class(k5, g5, 1, {}, 100);
  EXPECT_EQ(m.hnf, ideal_from_generators(k5, std::vector<AlgInt>{AlgInt(3), k5.elem(1, 1)}));
  EXPECT_EQ(m.norm(), 3);

  const QuadField q = QuadField::rationals();
  const IdealClassGroup gq = class_group(q);
  EXPECT_EQ(smallest_prime_in_class(q, gq, 0, {}, 100).p, 3);

  std::vector<PrimeIdeal> avoid;
  for (const PrimeIdeal& p : primes_up_to_norm(k5, 50)) {
    if (ideal_class_of(k5, p.hnf, g5) == 1) avoid.push_back(p);
  }
  try {
    smallest_prime_in_class(k5, g5, 1, avoid, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_found);
  }
}

TEST(QuadraticForms, CompositionMatchesIdealMultiplication) {
  const QuadField k = QuadField::make(-47);
  const auto primes = primes_up_to_norm(k, 40);
  for (const PrimeIdeal& a : primes) {
    for (const PrimeIdeal& b : primes) {
      const QuadraticForm composed = compose(reduce(ideal_to_form(k, a.hnf)), reduce(ideal_to_form(k, b.hnf)));
      EXPECT_EQ(composed, reduce(ideal_to_form(k, ideal_mul(k, a.hnf, b.hnf))));
    }
  }
}

}  // namespace
}  // namespace sfrey
