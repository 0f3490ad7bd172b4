#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "thomcx/bordism.hpp"
#include "thomcx/obstruction.hpp"

using namespace thomcx;
using C = CohomologyClass;

namespace {

SpaceModel lens2(int p) { return SpaceModel::lens_product(Prime(p), 2); }

HomologyTable kunneth_table(int p, int max_degree) {
  HomologyTable t;
  for (int n = 0; n <= max_degree; ++n) {
    AbelianGroup g;
    for (auto q : oracle::kunneth_bzp2(n, p)) g += q == 0 ? AbelianGroup::free(1) : AbelianGroup::cyclic(q);
    t.set(n, g);
  }
  return t;
}

}  // namespace

TEST(Integrality, Cohomology) {
  for (int p : {3, 5, 7}) {
    const auto s = lens2(p);
    EXPECT_EQ(is_integral(thom_class(s)).status, IntegralityStatus::Integral);
    EXPECT_EQ(is_integral(C::v(s, 0)).status, IntegralityStatus::Indeterminate);
    const auto nn = C::v(s, 0) * C::v(s, 1);
    const auto r = is_integral(nn);
    EXPECT_EQ(r.status, IntegralityStatus::NotIntegral);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(*r.witness, C::u(s, 0) * C::v(s, 1) - C::v(s, 0) * C::u(s, 1));
    for (int a = 0; a <= p; ++a)
      for (int b = 0; b <= p; ++b) {
        if (a + b == 0) continue;
        EXPECT_EQ(is_integral(C::u(s, 0, a) * C::u(s, 1, b)).status, IntegralityStatus::Integral);
      }
    EXPECT_EQ(is_integral(C::zero(s)).status, IntegralityStatus::Indeterminate);
    EXPECT_THROW(is_integral(C::u(s, 0) + C::u(s, 0, 2)), std::invalid_argument);
  }
}

TEST(Integrality, Homology) {
  for (int p : {3, 5, 7}) {
    const auto s = lens2(p);
    EXPECT_TRUE(is_integral(xi_class(s)).integral());
    EXPECT_TRUE(is_integral(poincare_dual(thom_class(s))).integral());
    const auto r = is_integral(HomologyClass::alpha(s, {2, 2}));
    EXPECT_EQ(r.status, IntegralityStatus::NotIntegral);
    EXPECT_EQ(*r.witness, HomologyClass::alpha(s, {1, 2}) + HomologyClass::alpha(s, {2, 1}));
  }
}

TEST(ThomVerdict, ThomClassIsNotRealizable) {
  for (int p : {3, 5, 7, 11, 13}) {
    const auto s = lens2(p);
    const auto report = thom_verdict(thom_class(s));
    EXPECT_EQ(report.verdict, Verdict::NotRealizable);
    EXPECT_EQ(report.integrality, IntegralityStatus::Integral);
    ASSERT_NE(report.witness(), nullptr);
    EXPECT_EQ(report.witness()->i, 1U);
    EXPECT_EQ(report.witness()->value, C::u(s, 0, p) * C::u(s, 1, p));
    EXPECT_EQ(report.obstructions.size(), static_cast<std::size_t>(p));
    for (const auto& t : report.obstructions) {
      EXPECT_LE(2 * t.i, static_cast<std::uint64_t>(2 * p + 1));
      EXPECT_EQ(t.target_degree, 2 * p + 1 + 2 * static_cast<int>(t.i) * (p - 1) + 1);
      if (!t.value.is_zero()) {
        EXPECT_EQ(t.value.degree(), t.target_degree);
      }
    }
    EXPECT_TRUE(report.notes.empty());
  }
}

TEST(ThomVerdict, ProductOfPolynomialGeneratorsIsInconclusive) {
  for (int p : {3, 5, 7}) {
    const auto s = lens2(p);
    const auto x = C::u(s, 0) * C::u(s, 1);
    EXPECT_EQ(steenrod_power(1, x), C::u(s, 0, p) * C::u(s, 1) + C::u(s, 0) * C::u(s, 1, p));
    const auto report = thom_verdict(x);
    EXPECT_EQ(report.verdict, Verdict::Inconclusive);
    EXPECT_EQ(report.witness(), nullptr);
    EXPECT_EQ(report.obstructions.size(), 2U);
  }
}

TEST(ThomVerdict, Errors) {
  const auto s = lens2(3);
  EXPECT_THROW(thom_verdict(C::zero(s)), std::invalid_argument);
  EXPECT_THROW(thom_verdict(C::v(s, 0) * C::v(s, 1)), std::invalid_argument);
  EXPECT_THROW(thom_verdict(C::u(s, 0) + C::u(s, 0, 2)), std::invalid_argument);
  EXPECT_THROW(thom_verdict(C::v(s, 0)), std::invalid_argument);
}

TEST(ThomVerdict, HighDegreeNote) {
  const auto s = lens2(3);
  const auto report = thom_verdict(C::u(s, 0, 3) * C::u(s, 1, 2));
  ASSERT_EQ(report.notes.size(), 1U);
  EXPECT_NE(report.notes.front().find("<= 6"), std::string::npos);
}

TEST(ThomVerdictProperty, ReportBoundsAndConsistency) {
  gen::Random rng(401);
  for (int p : gen::kPrimes) {
    int evaluated = 0;
    while (evaluated < gen::kCases) {
      const auto s = rng.space(Prime(p));
      const auto x = rng.homogeneous(s);
      if (!is_integral(x).integral()) continue;
      ++evaluated;
      const auto report = thom_verdict(x);
      const int d = *x.degree();
      bool any = false;
      for (const auto& t : report.obstructions) {
        ASSERT_LE(2 * static_cast<int>(t.i), d);
        any |= !t.value.is_zero();
      }
      ASSERT_EQ(report.obstructions.size(), static_cast<std::size_t>(d / 2));
      ASSERT_EQ(report.verdict == Verdict::NotRealizable, any);
      for (int i = d / 2 + 1; i <= d / 2 + 2; ++i) ASSERT_TRUE(thom_obstruction_class(x, i).is_zero());
    }
  }
}

TEST(Novikov, TorsionFreeTableIsRealizable) {
  HomologyTable t;
  for (int n = 0; n <= 40; ++n) t.set(n, AbelianGroup::free(n % 3));
  const std::vector<Prime> primes{Prime(3), Prime(5), Prime(7)};
  for (int n = 0; n <= 40; ++n) EXPECT_EQ(novikov_check(t, n, primes).verdict, NovikovVerdict::Realizable);
}

TEST(Novikov, KunnethTableOfClassifyingSquare) {
  for (int p : {3, 5, 7}) {
    const auto t = kunneth_table(p, 4 * p);
    EXPECT_EQ(t, integral_homology_table(Prime(p), 4 * p));
    const auto report = novikov_check(t, 2 * p + 1, {Prime(p)});
    EXPECT_EQ(report.verdict, NovikovVerdict::Inconclusive);
    ASSERT_FALSE(report.conditions.empty());
    const auto& c = report.conditions.front();
    EXPECT_EQ(c.i, 1);
    EXPECT_EQ(c.degree, 2);
    EXPECT_EQ(c.group.to_string(), "Z_" + std::to_string(p));
    EXPECT_TRUE(c.has_p_torsion);
    for (int n = 0; n <= 2 * (p - 1); ++n) {
      const auto r = novikov_check(t, n, {Prime(p)});
      EXPECT_EQ(r.verdict, NovikovVerdict::Realizable);
      EXPECT_TRUE(r.conditions.empty());
    }
  }
}

TEST(Novikov, MissingEntries) {
  HomologyTable t;
  t.set(0, AbelianGroup::free(1));
  EXPECT_THROW(novikov_check(t, 7, {Prime(3)}), std::out_of_range);
  t.set(7, AbelianGroup::free(1));
  EXPECT_THROW(novikov_check(t, 7, {Prime(3)}), std::out_of_range);
}

TEST(CrossRoute, D5AgreesWithThomVerdict) {
  const auto table = CoefficientTable::load(THOMCX_DEFAULT_OMEGA_TABLE);
  for (int p : {3, 5}) {
    const auto report = thom_verdict(thom_class(lens2(p)));
    const bool via_i1 = report.witness() != nullptr && report.witness()->i == 1;
    const auto d5 = evaluate_d5_xi(Prime(p), table);
    EXPECT_EQ(d5.nontrivial, via_i1);
  }
}
