#include <gtest/gtest.h>

#include "meadow/signexp.hpp"

using namespace meadow;

namespace {
Rational q(const char* s) { return Rational::parse(s); }
}  // namespace

TEST(Sign, Examples) {
  const RationalMeadow qm;
  EXPECT_EQ(sign(qm, q("-3/2")), Value(Rational(-1)));
  EXPECT_EQ(sign(qm, Rational(0)), Value(Rational(0)));
  EXPECT_EQ(sign(qm, Rational(1)), Value(Rational(1)));
  const auto qq = make_meadow("prod:[q0,q0]");
  EXPECT_EQ(qq->format(sign(*qq, qq->parse_value("<-2,3>"))), "<-1,1>");
  EXPECT_THROW(sign(*make_meadow("zp:5"), Residue(5, 1)), UnorderedMeadowError);
  EXPECT_THROW(sign_interpretation(make_meadow("zsf:6")), UnorderedMeadowError);
}

TEST(Sign, TotalityAndRange) {
  const auto qq = make_meadow("prod:[q0,q0]");
  SplitMix64 rng(3);
  for (int k = 0; k < 300; ++k) {
    const Value x = qq->sample(rng);
    const Value s = sign(*qq, x);
    const Value sx = qq->mul(s, x);
    for (std::size_t i = 0; i < 2; ++i) {
      const Rational c = s.parts()[i].rational();
      ASSERT_TRUE(c == Rational(-1) || c == Rational(0) || c == Rational(1));
      ASSERT_GE(sx.parts()[i].rational(), Rational(0));
    }
    ASSERT_EQ(sign(*qq, qq->inv(x)), s);
    ASSERT_EQ(qq->mul(qq->mul(s, s), x), x);
  }
}

TEST(Signs, DefaultGridOnQ0) {
  const auto m = make_meadow("q0");
  const auto r = check_signs(m, default_sign_grid(*m), kSignSamples, 0);
  EXPECT_TRUE(r.holds());
  ASSERT_EQ(r.verdicts.size(), 12u);
  EXPECT_EQ(r.verdicts[0].label, "S1");
  EXPECT_EQ(r.verdicts[0].verdict.status, Verdict::Status::HoldsGrid);
  EXPECT_EQ(r.verdicts[4].verdict.assignments_checked, 49u);  // S5 has two variables
  EXPECT_EQ(r.verdicts[6].label, "S1 sampled");
}

TEST(Signs, PairGridOnQ0xQ0) {
  const auto m = make_meadow("prod:[q0,q0]");
  const auto grid = default_sign_grid(*m);
  EXPECT_EQ(grid.size(), 49u);
  EXPECT_TRUE(check_signs(m, grid, 100, 1).holds());
}

TEST(Signs, S5Instance) {
  const auto m = make_meadow("q0");
  const Interpretation interp = sign_interpretation(m);
  const Assignment env{{"x", Rational(-1)}, {"y", Rational(-1)}};
  const Equation s5 = theories::signs().equations[4].equation;
  EXPECT_EQ(eval(s5.lhs, *m, env, interp), Value(Rational(1)));
  EXPECT_EQ(eval(s5.rhs, *m, env, interp), Value(Rational(1)));
}

TEST(Signs, GridParsing) {
  const auto m = make_meadow("q0");
  EXPECT_EQ(parse_sign_grid(*m, "1, -1/2, 1").size(), 2u);
  EXPECT_THROW(parse_sign_grid(*m, "1,,2"), std::invalid_argument);
  EXPECT_EQ(parse_sign_grid(*make_meadow("prod:[q0,q0]"), "0,1").size(), 4u);
}

TEST(Signs, WrongSignFunctionDetected) {
  // s(x) = 1 everywhere violates S2 at x = 0.
  const auto m = make_meadow("q0");
  Interpretation bogus;
  bogus.functions["s"] = [](const std::vector<Value>&) { return Value(Rational(1)); };
  const auto v = check_equation(*m, theories::signs().equations[1].equation,
                                {CheckMode::over_grid(default_sign_grid(*m)), 1, bogus});
  EXPECT_FALSE(v.holds());
}

TEST(OrderAxioms, HoldOnGrid) {
  const auto r = check_order_axioms(default_order_grid());
  ASSERT_EQ(r.size(), 4u);
  for (const auto& l : r) EXPECT_TRUE(l.verdict.holds()) << l.label;
  EXPECT_EQ(r[2].verdict.assignments_checked, 343u);
}

TEST(OrderAxioms, Instances) {
  EXPECT_LT(Rational(0) + Rational(-5), Rational(1) + Rational(-5));
  EXPECT_LT(Rational(1) * q("1/2"), Rational(2) * q("1/2"));
}

TEST(Efr, OrderedVersusFinite) {
  EXPECT_TRUE(check_efr(make_meadow("q0"), 5).holds());
  EXPECT_TRUE(check_efr(make_meadow("prod:[q0,q0]"), 5).holds());
  const auto z2 = make_meadow("zp:2");
  const auto r = check_efr(z2, 1);
  EXPECT_FALSE(r.holds());
  const auto& w = r.verdicts[1].verdict.witness;
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(z2->format(w->assignment[0].second), "1");
  EXPECT_EQ(z2->format(w->assignment[1].second), "1");
  EXPECT_THROW(check_efr(make_meadow("ext:[x^2+1]"), 1), UnorderedMeadowError);
}

TEST(EqMeadow, DisplayedComputation) {
  const auto m = eq_base_meadow();
  const Interpretation interp = eq_interpretation(m);
  const Value x = m->parse_value("<1,0>");
  const Equation ce = eq_counterexample_equation();
  EXPECT_EQ(m->format(eval(ce.lhs, *m, Assignment{{"x", x}}, interp)), "<0,0>");
  EXPECT_EQ(m->format(eval(ce.rhs, *m, Assignment{{"x", x}}, interp)), "<1,0>");
  EXPECT_EQ(m->format(eval(parse_term("eq(x, x)"), *m, Assignment{{"x", x}}, interp)), "<1,1>");
}

TEST(EqMeadow, FullReport) {
  const auto r = eq_meadow_checks();
  EXPECT_TRUE(r.matches_expected());
  EXPECT_EQ(r.defining.size(), 31u);
  EXPECT_EQ(r.expanded_congruences, 2u);
  EXPECT_EQ(r.reduct_congruences, 4u);
  EXPECT_EQ(r.inverse_of_displayed, "<1,0>");
  EXPECT_FALSE(r.counterexample.verdict.holds());
}

TEST(SquareRoot, NoRationalRootOfTwo) {
  EXPECT_FALSE(sqrt2_rational_root().has_value());
  EXPECT_EQ(theories::sr().equations.size(), 4u);
}
