#include "epw/errors.hpp"
#include "epw/formula.hpp"
#include "epw/random_instances.hpp"

#include <gtest/gtest.h>

namespace epw {
namespace {

GF2Vector bits(const char* s) { return GF2Vector::from_string(s); }

const char* kXor2 = "(x1 | x2) & !(x1 & x2)";

TEST(ParseFormula, Examples) {
  const Formula x1 = parse_formula("x1", 1);
  EXPECT_EQ(x1.root().kind, Formula::Kind::Var);
  EXPECT_EQ(x1.root().var, 1u);

  const Formula f = parse_formula("x1 | x2 | x3", 3);
  const auto v = [](std::size_t i) { return Formula::var(i); };
  EXPECT_EQ(f, Formula(Formula::disjunction(Formula::disjunction(v(1), v(2)), v(3)), 3));

  EXPECT_THROW(parse_formula("x1 & (x2", 2), SyntaxError);
}

TEST(ParseFormula, PrecedenceAndUnicode) {
  EXPECT_EQ(parse_formula("!x1 & x2 | x3", 3), parse_formula("((¬x1) ∧ x2) ∨ x3", 3));
  EXPECT_EQ(parse_formula("x1|x2&x3", 3).to_string(), "(x1 | (x2 & x3))");
  EXPECT_EQ(parse_formula("  !!x2 ", 2).to_string(), "!!x2");
}

TEST(ParseFormula, Errors) {
  EXPECT_THROW(parse_formula("x0", 3), VariableOutOfRange);
  EXPECT_THROW(parse_formula("x4", 3), VariableOutOfRange);
  EXPECT_THROW(parse_formula("", 3), SyntaxError);
  EXPECT_THROW(parse_formula("x1 x2", 3), SyntaxError);
  EXPECT_THROW(parse_formula("y1", 3), SyntaxError);
  EXPECT_THROW(parse_formula("x", 3), SyntaxError);
  EXPECT_THROW(parse_formula("x1 &", 3), SyntaxError);
  EXPECT_THROW(parse_formula("x1)", 3), SyntaxError);
}

TEST(ParseFormula, DeclaredCountMayExceedUsedVariables) {
  const Formula f = parse_formula("x1", 4);
  EXPECT_EQ(f.var_count(), 4u);
  EXPECT_EQ(truth_table(f).count_ones(), 8u);
}

TEST(Evaluate, Examples) {
  const Formula f = parse_formula("x1 | x2", 2);
  EXPECT_FALSE(evaluate(f, bits("00")));
  EXPECT_TRUE(evaluate(f, bits("01")));
  EXPECT_FALSE(evaluate(parse_formula("x1 | !x2 | !x3", 3), bits("011")));
  EXPECT_THROW(evaluate(f, bits("011")), LengthMismatch);
}

TEST(ApplyNegationVector, Examples) {
  const Formula g = parse_formula("x1 & !(x2 | x3)", 3);
  EXPECT_EQ(apply_negation_vector(g, GF2Vector(3)), g);

  const Formula paper_g = parse_formula("x1 | !x2 | !x3", 3);
  const Formula paper_f = parse_formula("x1 | x2 | x3", 3);
  EXPECT_EQ(truth_table(apply_negation_vector(paper_g, bits("011"))), truth_table(paper_f));

  const Formula x = parse_formula(kXor2, 2);
  EXPECT_EQ(truth_table(apply_negation_vector(x, bits("11"))), truth_table(x));

  EXPECT_THROW(apply_negation_vector(g, bits("01")), LengthMismatch);
}

TEST(TruthTable, Examples) {
  const auto t1 = truth_table(parse_formula("x1", 1));
  EXPECT_FALSE(t1.get(0));
  EXPECT_TRUE(t1.get(1));

  const auto t2 = truth_table(parse_formula("x1 & x2", 2));
  EXPECT_EQ(t2.count_ones(), 1u);
  EXPECT_TRUE(t2.get(3));

  EXPECT_EQ(truth_table(parse_formula("x1 | x2 | x3", 3)).count_ones(), 7u);
  EXPECT_THROW(truth_table(parse_formula("x1", 25)), TooManyVariables);
}

TEST(TruthTable, FlipInputMatchesReindexing) {
  Rng rng(3);
  for (std::size_t n : {1u, 3u, 6u, 7u, 9u}) {
    const Formula f = random_formula(rng, n, 5, true);
    const TruthTable t = truth_table(f);
    for (std::size_t i = 0; i < n; ++i) {
      TruthTable flipped = t;
      flipped.flip_input(i);
      for (std::uint64_t u = 0; u < t.size(); ++u) {
        ASSERT_EQ(flipped.get(u), t.get(u ^ (std::uint64_t{1} << i)));
      }
    }
  }
}

// Properties: the bit-parallel table agrees with the recursive evaluator, and
// negation vectors act as the group GF(2)^n.
TEST(FormulaProperties, NegationIsAGroupAction) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const Formula g = random_formula(rng, n, 5, trial % 2 == 0);
    const GF2Vector v = random_vector(rng, n);
    const GF2Vector w = random_vector(rng, n);
    const TruthTable tg = truth_table(g);
    const Formula gv = apply_negation_vector(g, v);
    for (std::uint64_t u = 0; u < tg.size(); ++u) {
      const auto a = GF2Vector::from_index(u, n);
      ASSERT_EQ(evaluate(g, a), tg.get(u));
      ASSERT_EQ(evaluate(gv, a), evaluate(g, v ^ a));
    }
    ASSERT_EQ(truth_table(apply_negation_vector(gv, v)), tg);
    ASSERT_EQ(truth_table(apply_negation_vector(gv, w)), truth_table(apply_negation_vector(g, v ^ w)));
  }
}

}  // namespace
}  // namespace epw
