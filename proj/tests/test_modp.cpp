#include <gtest/gtest.h>

#include "oracles.hpp"
#include "thomcx/modp.hpp"

using thomcx::binom_mod_p;
using thomcx::Fp;
using thomcx::Prime;

TEST(Prime, RejectsTwoAndComposites) {
  EXPECT_THROW(Prime(2), std::invalid_argument);
  EXPECT_THROW(Prime(4), std::invalid_argument);
  EXPECT_THROW(Prime(9), std::invalid_argument);
  EXPECT_THROW(Prime(1), std::invalid_argument);
  EXPECT_THROW(Prime(-3), std::invalid_argument);
  EXPECT_THROW(Prime(65537), std::invalid_argument);
  EXPECT_EQ(Prime(13).value(), 13U);
  EXPECT_EQ(Prime(65521).value(), 65521U);
}

TEST(Binomial, Examples) {
  for (int p : {3, 5, 7, 11}) {
    const Prime q(p);
    EXPECT_EQ(binom_mod_p(p, 1, q).value(), 0U);
    EXPECT_EQ(binom_mod_p(p - 1, 1, q).value(), static_cast<unsigned>(p - 1));
  }
  EXPECT_EQ(oracle::factorial_binom(7, 3), 35U);
  EXPECT_EQ(binom_mod_p(7, 3, Prime(5)).value(), oracle::factorial_binom(7, 3) % 5);
  EXPECT_EQ(binom_mod_p(3, 5, Prime(7)).value(), 0U);
}

TEST(Binomial, LucasAgreesWithPascal) {
  for (std::uint32_t p : {3U, 5U, 7U}) {
    const auto rows = oracle::pascal_mod(200, p);
    const Prime q(p);
    for (int n = 0; n <= 200; ++n)
      for (int k = 0; k <= 200; ++k) {
        const std::uint32_t expected = k <= n ? rows[n][k] : 0;
        ASSERT_EQ(binom_mod_p(n, k, q).value(), expected) << "n=" << n << " k=" << k << " p=" << p;
      }
  }
}

TEST(Binomial, AgreesWithFactorialsForSmallN) {
  for (std::uint32_t p : {3U, 5U, 7U, 11U, 13U})
    for (std::uint64_t n = 0; n <= 20; ++n)
      for (std::uint64_t k = 0; k <= n; ++k)
        ASSERT_EQ(binom_mod_p(n, k, Prime(p)).value(), oracle::factorial_binom(n, k) % p);
}

TEST(Field, Examples) {
  const Prime five(5);
  EXPECT_EQ(Fp(2, five).inverse().value(), 3U);
  EXPECT_EQ(oracle::inverse_by_search(2, 5), 3U);
  for (int p : {3, 5, 7}) {
    const Prime q(p);
    EXPECT_TRUE((Fp(p - 1, q) + Fp(1, q)).is_zero());
    for (int x = 0; x < p; ++x) EXPECT_TRUE((Fp(0, q) * Fp(x, q)).is_zero());
  }
  EXPECT_EQ(Fp(-1, five).value(), 4U);
  EXPECT_EQ(Fp(12, five).value(), 2U);
}

TEST(Field, Errors) {
  EXPECT_THROW(Fp(0, Prime(7)).inverse(), std::domain_error);
  EXPECT_THROW(Fp(1, Prime(3)) + Fp(1, Prime(5)), std::invalid_argument);
  EXPECT_THROW((void)(Fp(1, Prime(3)) == Fp(1, Prime(5))), std::invalid_argument);
}

TEST(Field, LawsHoldExhaustively) {
  for (int p : {3, 5, 7, 11, 13}) {
    const Prime q(p);
    for (int a = 0; a < p; ++a) {
      const Fp x(a, q);
      if (a != 0) {
        EXPECT_EQ(x * x.inverse(), Fp::one(q));
        EXPECT_EQ(x.inverse().value(), oracle::inverse_by_search(a, p));
        EXPECT_EQ(x.pow(p - 1), Fp::one(q));
      }
      EXPECT_TRUE((x + (-x)).is_zero());
      for (int b = 0; b < p; ++b) {
        const Fp y(b, q);
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x - y) + y, x);
        if (b != 0) {
          EXPECT_EQ((x / y) * y, x);
        }
        for (int c = 0; c < p; ++c) {
          const Fp z(c, q);
          EXPECT_EQ((x + y) + z, x + (y + z));
          EXPECT_EQ((x * y) * z, x * (y * z));
          EXPECT_EQ(x * (y + z), x * y + x * z);
        }
      }
    }
  }
}
