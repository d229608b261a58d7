#include "epw/errors.hpp"
#include "epw/fewamp.hpp"

#include <gtest/gtest.h>

namespace epw {
namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

std::vector<BigInt> constants(const AmplifierTable& t) { return {t.c.begin() + 1, t.c.end()}; }

// Direct evaluation of the defining recurrence, independent of the library:
// c1 = least, c_i = (least member >= b_i) - b_i with b_i from Pascal's rule.
std::vector<BigInt> recurrence_oracle(const AcceptanceSet& s, std::size_t p) {
  std::vector<std::vector<BigInt>> pascal{{1}};
  for (std::size_t i = 1; i <= p; ++i) {
    std::vector<BigInt> row(i + 1, 1);
    for (std::size_t k = 1; k < i; ++k) row[k] = pascal[i - 1][k - 1] + pascal[i - 1][k];
    pascal.push_back(row);
  }
  std::vector<BigInt> c{0, s.least_element()};
  for (std::size_t i = 2; i <= p; ++i) {
    BigInt b = 0;
    for (std::size_t k = 1; k < i; ++k) b += pascal[i][k] * c[k];
    BigInt a = b;
    while (!s.contains(a)) ++a;
    c.push_back(a - b);
  }
  return {c.begin() + 1, c.end()};
}

TEST(AcceptanceSets, Membership) {
  const PowersOf pow2(2);
  EXPECT_TRUE(pow2.contains(1));
  EXPECT_TRUE(pow2.contains(1024));
  EXPECT_FALSE(pow2.contains(0));
  EXPECT_FALSE(pow2.contains(6));
  EXPECT_EQ(pow2.next_geq(5), 8);
  EXPECT_EQ(pow2.least_element(), 1);
  EXPECT_EQ(pow2.print_up_to(20), big({1, 2, 4, 8, 16}));

  const NonMultiplesOf odd(2);
  EXPECT_EQ(odd.next_geq(6), 7);
  EXPECT_EQ(odd.print_up_to(7), big({1, 3, 5, 7}));

  const DoublyExponential dexp;
  EXPECT_EQ(dexp.print_up_to(65536), big({2, 4, 16, 256, 65536}));
  EXPECT_FALSE(dexp.contains(8));

  const ExplicitFinite fin(big({5, 3, 3}));
  EXPECT_EQ(fin.least_element(), 3);
  EXPECT_THROW(fin.next_geq(6), SetExhausted);
  EXPECT_THROW(ExplicitFinite({}).least_element(), EmptySet);
}

TEST(AcceptanceSets, Factory) {
  EXPECT_EQ(make_acceptance_set("pow2")->name(), "pow2");
  EXPECT_EQ(make_acceptance_set("pow:3")->next_geq(10), 27);
  EXPECT_EQ(make_acceptance_set("nonmult:5")->gap_constant(), BigInt(2));
  EXPECT_EQ(make_acceptance_set("nonmult:2")->gap_constant(), BigInt(3));
  EXPECT_THROW(make_acceptance_set("primes"), Error);
  EXPECT_THROW(make_acceptance_set("nonmult:x"), Error);
  EXPECT_THROW(make_acceptance_set("pow:1"), Error);
}

TEST(CheckNonGappy, Examples) {
  EXPECT_TRUE(check_non_gappy(PowersOf(2), 2, pow2(20)).pass);

  const auto single = check_non_gappy(ExplicitFinite(big({1})), 1000, 10);
  EXPECT_FALSE(single.pass);
  EXPECT_EQ(single.violations, big({1}));

  // Members up to 2^16: 2, 4, 16, 256, 65536. 256 -> 65536 and
  // 65536 -> 2^32 both exceed the factor 100.
  const auto dexp = check_non_gappy(DoublyExponential(), 100, pow2(16));
  EXPECT_FALSE(dexp.pass);
  EXPECT_EQ(dexp.violations, big({256, 65536}));

  EXPECT_THROW(check_non_gappy(ExplicitFinite({}), 2, 10), EmptySet);
}

TEST(CheckNonGappy, DeclaredConstantsHold) {
  for (const char* name : {"pow2", "pow4", "pow:3", "nonmult:2", "nonmult:3", "nonmult:5"}) {
    const auto s = make_acceptance_set(name);
    EXPECT_TRUE(check_non_gappy(*s, *s->gap_constant(), 5000).pass) << name;
  }
  EXPECT_FALSE(check_non_gappy(NonMultiplesOf(2), 2, 100).pass);
}

TEST(BuildConstants, Examples) {
  const auto pow2t = build_constants(std::make_shared<PowersOf>(2), 6);
  EXPECT_EQ(constants(pow2t), big({1, 0, 1, 0, 1, 0}));
  EXPECT_EQ(pow2t.b[2], 2);
  EXPECT_EQ(pow2t.b[3], 3);
  EXPECT_EQ(pow2t.a[3], 4);
  EXPECT_EQ(pow2t.b[5], 15);
  EXPECT_EQ(pow2t.a[5], 16);
  EXPECT_EQ(pow2t.b[6], 32);

  const auto odd = build_constants(std::make_shared<NonMultiplesOf>(2), 3);
  EXPECT_EQ(constants(odd), big({1, 1, 1}));
  EXPECT_EQ(odd.a[2], 3);
  EXPECT_EQ(odd.a[3], 7);

  const auto pow4 = build_constants(std::make_shared<PowersOf>(4), 3);
  EXPECT_EQ(constants(pow4), big({1, 2, 7}));
  EXPECT_EQ(pow4.b[3], 9);
  EXPECT_EQ(pow4.a[3], 16);

  EXPECT_THROW(build_constants(std::make_shared<ExplicitFinite>(big({1, 2})), 4), SetExhausted);
}

TEST(BuildConstants, MatchesRecurrenceOracle) {
  for (const char* name : {"pow2", "pow4", "pow:3", "nonmult:2", "nonmult:3", "nonmult:5"}) {
    const auto s = make_acceptance_set(name);
    EXPECT_EQ(constants(build_constants(s, 12)), recurrence_oracle(*s, 12)) << name;
  }
}

TEST(AmplifiedCount, Examples) {
  const auto pow2t = build_constants(std::make_shared<PowersOf>(2), 6);
  EXPECT_EQ(amplified_count(pow2t, 0), 0);
  EXPECT_EQ(amplified_count(pow2t, 5), 16);
  EXPECT_THROW(amplified_count(pow2t, 7), OutOfRange);

  EXPECT_EQ(amplified_count(build_constants(std::make_shared<PowersOf>(4), 3), 3), 16);
}

TEST(SimulateAmplifier, Examples) {
  const auto pow2t = build_constants(std::make_shared<PowersOf>(2), 6);
  EXPECT_EQ(simulate_amplifier(pow2t, FewRun::from_string("RRRR")), 0);
  EXPECT_EQ(simulate_amplifier(pow2t, FewRun::from_string("ARA")), 2);
  EXPECT_EQ(simulate_amplifier(pow2t, FewRun::from_string("AARAARA")), amplified_count(pow2t, 5));
  EXPECT_EQ(simulate_amplifier(pow2t, FewRun::from_string("AARAARA")), 16);

  EXPECT_THROW(simulate_amplifier(pow2t, FewRun::from_string(std::string(21, 'R'))), TooManyPaths);
  EXPECT_THROW(simulate_amplifier(pow2t, FewRun::from_string("AAAAAAA")), OutOfRange);
  EXPECT_THROW(FewRun::from_string("AXR"), Error);
}

TEST(SimulateAmplifier, OnlySubsetsUpToPContribute) {
  // With p = 2 a run with 2 accepting paths among 5 still sees only pairs.
  const auto t = build_constants(std::make_shared<PowersOf>(4), 2);
  EXPECT_EQ(simulate_amplifier(t, FewRun::from_string("RARAR")), amplified_count(t, 2));
}

TEST(VerifyGrowth, Examples) {
  EXPECT_TRUE(verify_growth(build_constants(std::make_shared<PowersOf>(2), 40), 2).pass);
  EXPECT_TRUE(verify_growth(build_constants(std::make_shared<PowersOf>(4), 20), 4).pass);

  auto forged = build_constants(std::make_shared<PowersOf>(2), 10);
  forged.c[5] = pow2(100);
  const auto v = verify_growth(forged, 2);
  EXPECT_FALSE(v.pass);
  ASSERT_FALSE(v.ratio_failures.empty());
  EXPECT_EQ(v.ratio_failures.front(), 5u);
  EXPECT_EQ(v.log_failures, std::vector<std::size_t>{5});
}

TEST(CheckRcDiscipline, Examples) {
  const PowersOf s(2);
  const std::vector<std::pair<bool, BigInt>> ok{{true, 4}, {false, 0}, {true, 1}};
  EXPECT_TRUE(check_rc_discipline(ok, s).pass);

  const std::vector<std::pair<bool, BigInt>> six{{true, 6}};
  EXPECT_FALSE(check_rc_discipline(six, s).pass);

  const std::vector<std::pair<bool, BigInt>> reject{{false, 3}};
  const auto v = check_rc_discipline(reject, NonMultiplesOf(2));
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.violations, std::vector<std::size_t>{0});
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}

// Membership guarantee on every built-in non-gappy set, and the ModZ_k
// instances never produce a multiple of k.
TEST(FewAmpProperties, AmplifiedCountsLandInTheSet) {
  for (const char* name : {"pow2", "pow4", "pow:3", "nonmult:2", "nonmult:3", "nonmult:5", "nonmult:7"}) {
    const auto s = make_acceptance_set(name);
    const auto t = build_constants(s, 40);
    EXPECT_EQ(amplified_count(t, 0), 0);
    for (std::size_t m = 1; m <= 40; ++m) {
      const BigInt count = amplified_count(t, m);
      ASSERT_TRUE(s->contains(count)) << name << " m=" << m;
      ASSERT_EQ(count, m == 1 ? t.c[1] : t.a[m]);
    }
    EXPECT_TRUE(verify_growth(t, *s->gap_constant()).pass) << name;
  }
}

}  // namespace
}  // namespace epw
