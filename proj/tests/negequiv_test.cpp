#include "epw/errors.hpp"
#include "epw/negequiv.hpp"
#include "epw/random_instances.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

namespace epw {
namespace {

Formula F(const char* text, std::size_t n) { return parse_formula(text, n); }

const char* kXor3 = "((x1 | x2) & !(x1 & x2) | x3) & !(((x1 | x2) & !(x1 & x2)) & x3)";
const char* kXor2 = "(x1 | x2) & !(x1 & x2)";

std::vector<std::string> strings(const std::vector<GF2Vector>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(SelfStabilizer, Examples) {
  EXPECT_EQ(self_stabilizer(F("x1 | x2", 2), 2).dim(), 0u);

  const GF2Basis parity = self_stabilizer(F(kXor3, 3), 3);
  EXPECT_EQ(parity.dim(), 2u);
  for (std::uint64_t v = 0; v < 8; ++v) {
    const auto vec = GF2Vector::from_index(v, 3);
    EXPECT_EQ(member(parity, vec), vec.weight() % 2 == 0);
  }

  EXPECT_EQ(self_stabilizer(F("x1 | !x1", 1), 1).dim(), 1u);
  EXPECT_THROW(self_stabilizer(F("x1", 25), 25), TooManyVariables);
}

TEST(SelfStabilizer, SymbolicMatchesBrute) {
  auto m = BddManager::create_identity(3);
  EXPECT_EQ(self_stabilizer(build(F(kXor3, 3), m)), self_stabilizer(F(kXor3, 3), 3));
  EXPECT_EQ(self_stabilizer(build(F("x1 | x2", 3), m)).dim(), 1u);  // x3 is free
}

TEST(WitnessesBrute, Examples) {
  const auto paper = witnesses_brute(F("x1 | x2 | x3", 3), F("x1 | !x2 | !x3", 3), 3);
  EXPECT_EQ(strings(paper.elements()), std::vector<std::string>{"011"});
  EXPECT_EQ(coset_cardinality(paper), 1);

  const Formula g = F(kXor3, 3);
  const auto self = witnesses_brute(g, g, 3);
  EXPECT_TRUE(self.contains(GF2Vector(3)));
  EXPECT_EQ(self.basis(), self_stabilizer(g, 3));

  const auto none = witnesses_brute(F("x1 & x2", 2), F("x1 | x2", 2), 2);
  EXPECT_TRUE(none.empty());
  EXPECT_EQ(coset_cardinality(none), 0);

  EXPECT_THROW(witnesses_brute(F("x1", 2), F("x1", 3), 2), VariableCountMismatch);
}

TEST(WitnessesSymbolic, Examples) {
  auto m1 = BddManager::create_identity(1);
  const Obdd x1 = build(F("x1", 1), m1);
  EXPECT_EQ(witnesses_symbolic(x1, x1).count, 1);

  auto m3 = BddManager::create_identity(3);
  const auto paper = witnesses_symbolic(build(F("x1 | x2 | x3", 3), m3), build(F("x1 | !x2 | !x3", 3), m3));
  EXPECT_EQ(paper.count, 1);
  EXPECT_EQ(strings(paper.models()), std::vector<std::string>{"011"});

  auto m2 = BddManager::create_identity(2);
  EXPECT_EQ(witnesses_symbolic(build(F("x1 & x2", 2), m2), build(F("x1 | x2", 2), m2)).count, 0);

  EXPECT_THROW(witnesses_symbolic(x1, build(F("x1", 1), BddManager::create_identity(1))), OrderMismatch);
}

TEST(WitnessesSymbolic, NonIdentityOrder) {
  auto m = BddManager::create({3, 1, 2});
  const auto w = witnesses_symbolic(build(F("x1 | x2 | x3", 3), m), build(F("x1 | !x2 | !x3", 3), m));
  EXPECT_EQ(strings(w.models()), std::vector<std::string>{"011"});
}

TEST(Decide, Examples) {
  for (Method method : {Method::Brute, Method::Symbolic}) {
    const Formula f = F(kXor3, 3);
    const auto self = decide_negation_equivalence(f, f, 3, method);
    EXPECT_TRUE(self.equivalent);
    EXPECT_EQ(self.witness_count, pow2(static_cast<unsigned>(self_stabilizer(f, 3).dim())));

    const auto paper = decide_negation_equivalence(F("x1 | x2 | x3", 3), F("x1 | !x2 | !x3", 3), 3, method);
    EXPECT_TRUE(paper.equivalent);
    EXPECT_EQ(paper.witness_count, 1);
    EXPECT_EQ(paper.stabilizer_dim, 0u);
    EXPECT_EQ(paper.witnesses.representative().to_string(), "011");
    EXPECT_EQ(paper.method, method);

    const auto x = decide_negation_equivalence(F(kXor2, 2), F("!((x1 | x2) & !(x1 & x2))", 2), 2, method);
    EXPECT_TRUE(x.equivalent);
    EXPECT_EQ(x.witness_count, 2);
    EXPECT_EQ(strings(x.witnesses.elements()), (std::vector<std::string>{"01", "10"}));
    EXPECT_TRUE(x.power_of_two_or_zero);
  }
  EXPECT_THROW(decide_negation_equivalence(F("x1", 2), F("x1", 3), 3, Method::Brute), VariableCountMismatch);
}

// Witness sets are cosets of the stabilizer of g (checked against a direct
// evaluation oracle), counts are 0 or powers of two, both routes agree, and
// equivalence is symmetric.
TEST(NegEquivProperties, CosetLawAgainstOracle) {
  Rng rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Formula g = random_formula(rng, n, 4, trial % 2 == 0);
    const Formula f = trial % 3 == 0 ? random_formula(rng, n, 4, true)
                                     : apply_negation_vector(g, random_vector(rng, n));
    const auto expected = oracle::negation_witnesses(f, g);
    ASSERT_TRUE(oracle::is_affine(expected));

    const auto brute = decide_negation_equivalence(f, g, n, Method::Brute);
    const auto symbolic = decide_negation_equivalence(f, g, n, Method::Symbolic);
    std::vector<std::uint64_t> got;
    for (const auto& v : brute.witnesses.elements()) got.push_back(v.to_index());
    std::sort(got.begin(), got.end());
    ASSERT_EQ(got, expected) << f.to_string() << " vs " << g.to_string();
    ASSERT_EQ(brute.witness_count, symbolic.witness_count);
    ASSERT_EQ(brute.witnesses, symbolic.witnesses);
    ASSERT_EQ(brute.stabilizer_dim, symbolic.stabilizer_dim);
    ASSERT_TRUE(brute.power_of_two_or_zero);

    if (!expected.empty()) {
      const auto stab = self_stabilizer(g, n);
      const auto w = GF2Vector::from_index(expected.front(), n);
      for (const auto& s : stab.span()) ASSERT_TRUE(brute.witnesses.contains(w ^ s));
      ASSERT_EQ(brute.witness_count, pow2(static_cast<unsigned>(stab.dim())));
    }
    const auto reverse = decide_negation_equivalence(g, f, n, Method::Brute);
    ASSERT_EQ(reverse.equivalent, brute.equivalent);
    ASSERT_EQ(reverse.witness_count, brute.witness_count);
  }
}

}  // namespace
}  // namespace epw
