#include <gtest/gtest.h>

#include "meadow/modelcheck.hpp"
#include "meadow/numberfield.hpp"
#include "meadow/signexp.hpp"

using namespace meadow;

namespace {

const std::vector<std::string> kFleet = {"zp:2", "zp:3", "zp:5", "zp:7", "zsf:6", "zsf:10", "zsf:30",
                                         "prod:[zp:2,zp:3]", "prod:[zp:2,zp:2]", "prod:[zp:3,zp:5]"};

CheckOptions exhaustive(unsigned workers = 1) { return {CheckMode::exhaustive(), workers, {}}; }

// Re-evaluates a failing witness with the structural evaluator.
void expect_witness_refutes(const Meadow& m, const Equation& e, const Verdict& v, const Interpretation& interp = {}) {
  ASSERT_FALSE(v.holds());
  ASSERT_TRUE(v.witness.has_value());
  const Value l = eval(e.lhs, m, v.witness->assignment, interp);
  const Value r = eval(e.rhs, m, v.witness->assignment, interp);
  EXPECT_NE(l, r);
  EXPECT_EQ(l, v.witness->lhs);
  EXPECT_EQ(r, v.witness->rhs);
}

}  // namespace

TEST(Eval, Examples) {
  const auto z3 = make_meadow("zp:3");
  EXPECT_EQ(z3->format(eval(parse_term("4"), *z3, Assignment{})), "1");
  const auto z5 = make_meadow("zp:5");
  EXPECT_EQ(z5->format(eval(parse_term("5 * 5^-1"), *z5, Assignment{})), "0");
  const auto p = make_meadow("prod:[zp:2,zp:3]");
  const Value x = p->parse_value("<0,1>");
  EXPECT_EQ(p->format(eval(parse_term("x * x^-1"), *p, Assignment{{"x", x}})), "<0,1>");
  const auto q = make_meadow("q0");
  EXPECT_EQ(q->format(eval(parse_term("100000"), *q, Assignment{})), "100000");
}

TEST(Eval, Errors) {
  const auto q = make_meadow("q0");
  EXPECT_THROW(eval(parse_term("x + 1"), *q, Assignment{}), EvalError);
  EXPECT_THROW(eval(parse_term("s(1)"), *q, Assignment{}), EvalError);
  const auto sig = Signature::standard().with_constants({"k"});
  EXPECT_THROW(eval(parse_term("k", sig), *q, Assignment{}), EvalError);
}

TEST(CheckEquation, Examples) {
  const auto p = make_meadow("prod:[zp:2,zp:3]");
  const auto v = check_equation(*p, parse_equation("x * (x * x^-1) = x"), exhaustive());
  EXPECT_EQ(v.status, Verdict::Status::HoldsExhaustive);
  EXPECT_EQ(v.assignments_checked, 6u);

  const auto z5 = make_meadow("zp:5");
  const Equation five = parse_equation("5 * 5^-1 = 1");
  const auto c = check_equation(*z5, five, {CheckMode::closed(), 1, {}});
  expect_witness_refutes(*z5, five, c);
  EXPECT_EQ(z5->format(c.witness->lhs), "0");

  const auto q = make_meadow("q0");
  const auto s = check_equation(*q, parse_equation("x * x^-1 * x = x"), {CheckMode::sample(100, 42), 1, {}});
  EXPECT_EQ(s.status_name(), "holds_sampled(100)");
}

TEST(CheckEquation, ModeErrors) {
  const auto q = make_meadow("q0");
  EXPECT_THROW(check_equation(*q, parse_equation("x = x"), exhaustive()), InfiniteCarrierError);
  EXPECT_THROW(check_equation(*q, parse_equation("x = x"), {CheckMode::closed(), 1, {}}), std::invalid_argument);
  const auto z = make_meadow("zsf:30");
  EXPECT_THROW(check_equation(*z, parse_equation("a + b + c + d + e = 0"), exhaustive()), CapacityError);
}

TEST(CheckEquation, WitnessIsLeastAndWorkerIndependent) {
  const auto m = make_meadow("zsf:30");
  const Equation e = parse_equation("x * y = y");
  const auto one = check_equation(*m, e, exhaustive(1));
  expect_witness_refutes(*m, e, one);
  // x = 0, y = 1 is the first failure with x most significant.
  EXPECT_EQ(m->format(one.witness->assignment[0].second), "0");
  EXPECT_EQ(m->format(one.witness->assignment[1].second), "1");
  for (unsigned w : {2u, 3u, 8u}) {
    const auto other = check_equation(*m, e, exhaustive(w));
    EXPECT_EQ(other.assignments_checked, one.assignments_checked);
    EXPECT_EQ(other.witness->assignment, one.witness->assignment);
  }
  // Late failure: only x = 29, y = 29, z = 29 refutes.
  const Equation late = parse_equation("eq(x + y + z, 27) * eq(x, 29) * eq(y, 29) = 0");
  const CheckOptions opt{CheckMode::exhaustive(), 1, eq_interpretation(m)};
  const auto a = check_equation(*m, late, opt);
  auto opt8 = opt;
  opt8.workers = 8;
  const auto b = check_equation(*m, late, opt8);
  expect_witness_refutes(*m, late, a, opt.interp);
  EXPECT_EQ(a.assignments_checked, 27000u);
  EXPECT_EQ(b.witness->assignment, a.witness->assignment);
}

TEST(CheckEquation, SampledIsSeedDeterministic) {
  const auto q = make_meadow("q0");
  const Equation e = parse_equation("(x + y) * (x + y)^-1 = 1");
  const auto a = check_equation(*q, e, {CheckMode::sample(500, 9), 1, {}});
  const auto b = check_equation(*q, e, {CheckMode::sample(500, 9), 4, {}});
  ASSERT_FALSE(a.holds());
  EXPECT_EQ(a.witness->assignment, b.witness->assignment);
  EXPECT_EQ(a.assignments_checked, b.assignments_checked);
  expect_witness_refutes(*q, e, a);
}

TEST(InverseLaw, Examples) {
  EXPECT_EQ(check_IL(*make_meadow("zp:7"), exhaustive()).status, Verdict::Status::HoldsExhaustive);
  const auto p = make_meadow("prod:[zp:2,zp:3]");
  const auto v = check_IL(*p, exhaustive());
  ASSERT_FALSE(v.holds());
  EXPECT_EQ(p->format(v.witness->assignment[0].second), "<0,1>");
  EXPECT_EQ(p->format(v.witness->lhs), "<0,1>");
  EXPECT_EQ(p->format(v.witness->rhs), "<1,1>");

  const auto qq = make_meadow("prod:[q0,q0]");
  const auto s = check_IL(*qq, {CheckMode::sample(200, 0), 1, {}});
  ASSERT_FALSE(s.holds());
  EXPECT_EQ(qq->format(s.witness->assignment[0].second), "<1,0>");
  EXPECT_EQ(check_IL(*make_meadow("q0"), {CheckMode::sample(500, 0), 1, {}}).status, Verdict::Status::HoldsSampled);
}

TEST(Theory, Examples) {
  const auto r = check_theory(*make_meadow("zsf:30"), theories::md(), exhaustive());
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.verdicts.size(), 10u);
  EXPECT_EQ(r.verdicts[0].verdict.assignments_checked, 27000u);

  const auto qq = make_meadow("prod:[q0,q0]");
  const auto inv = check_theory(*qq, theories::inv_p(50), {CheckMode::closed(), 1, {}});
  EXPECT_TRUE(inv.holds());
  EXPECT_EQ(inv.verdicts.size(), 15u);

  const auto z2 = make_meadow("zp:2");
  const auto efr = check_theory(*z2, theories::efr(1), exhaustive());
  EXPECT_TRUE(efr.verdicts[0].verdict.holds());
  const auto& bad = efr.verdicts[1];
  expect_witness_refutes(*z2, bad.equation, bad.verdict);
  EXPECT_EQ(z2->format(bad.verdict.witness->assignment[0].second), "1");
  EXPECT_EQ(z2->format(bad.verdict.witness->assignment[1].second), "1");
}

TEST(Combine, PairShape) {
  const Term x = Term::var("x"), y = Term::var("y");
  EXPECT_EQ(combine_pair(x, y), parse_equation("(1 - y * y^-1) * (1 - x * x^-1) = 1"));
  const Equation zz = combine_pair(Term::zero(), Term::zero());
  for (const auto& d : kFleet) {
    EXPECT_TRUE(check_equation(*make_meadow(d), zz, {CheckMode::closed(), 1, {}}).holds());
  }
  const Equation c = combine_pair(parse_term("x - x"), parse_term("y * 0"));
  EXPECT_TRUE(check_equation(*make_meadow("zsf:6"), c, exhaustive()).holds());
}

TEST(Combine, PerAssignmentCorrectnessOnFleet) {
  const Equation c = combine_pair(Term::var("r"), Term::var("t"));
  for (const auto& d : kFleet) {
    const auto m = make_meadow(d);
    for (std::uint64_t a = 0; a < m->size(); ++a) {
      for (std::uint64_t b = 0; b < m->size(); ++b) {
        const Assignment env{{"r", m->element(a)}, {"t", m->element(b)}};
        const bool one = eval(c.lhs, *m, env) == m->one();
        ASSERT_EQ(one, a == m->zero_index() && b == m->zero_index()) << d;
      }
    }
  }
}

TEST(Combine, ReduceToSingle) {
  const Equation x0 = parse_equation("x = 0");
  EXPECT_EQ(reduce_to_single({x0}), x0);
  EXPECT_EQ(reduce_to_single({x0, parse_equation("y = 0")}), parse_equation("(1 - y * y^-1) * (1 - x * x^-1) = 1"));
  EXPECT_THROW(reduce_to_single({}), std::invalid_argument);
  EXPECT_EQ(normalize_to_zero(parse_equation("x = y")), parse_term("x - y"));

  const std::vector<Equation> three{x0, parse_equation("y = 0"), parse_equation("z = 0")};
  const auto m = make_meadow("zsf:6");
  const Equation combined = reduce_to_single(three);
  EXPECT_TRUE(check_law(*m, equivalence_law(*m, three, combined), exhaustive()).holds());
}

TEST(Combine, EquivalenceLawDetectsWrongCombination) {
  const std::vector<Equation> eqs{parse_equation("x = 0"), parse_equation("y = 0")};
  const auto m = make_meadow("zsf:6");
  const auto v = check_law(*m, equivalence_law(*m, eqs, parse_equation("x * y = 0")), exhaustive());
  ASSERT_FALSE(v.holds());
  EXPECT_EQ(m->format(v.witness->assignment[1].second), "1");  // x = 0, y = 1: product is 0 but y != 0
}

TEST(InitialSpec, Examples) {
  const auto a = initial_spec_check({parse_equation("(1 + x1 * x1 + x2 * x2) * (1 + x1 * x1 + x2 * x2)^-1 = 1")}, 50);
  EXPECT_FALSE(a.refuted());
  EXPECT_EQ(a.primes.size(), 15u);
  for (const auto& pc : a.primes) {
    EXPECT_FALSE(pc.model);
    ASSERT_TRUE(pc.witness.has_value());
  }
  const auto b = initial_spec_check({parse_equation("x = x")}, 10);
  ASSERT_TRUE(b.refuted());
  EXPECT_EQ(*b.refuting_prime, 2u);
  const auto c = initial_spec_check({single_spec_equation(single_spec_poly(2, 3))}, 100, 2);
  EXPECT_FALSE(c.refuted());
}

TEST(SeparatingPrime, Examples) {
  const auto r = separating_prime({2, 3, 5}, 100);
  ASSERT_TRUE(r.prime.has_value());
  EXPECT_EQ(*r.prime, 7u);
  const auto m = make_meadow("zp:7");
  for (std::uint64_t q : {2u, 3u, 5u}) {
    EXPECT_TRUE(check_equation(*m, {one_of(numeral(q)), Term::one()}, {CheckMode::closed(), 1, {}}).holds());
  }
  EXPECT_FALSE(check_equation(*m, {one_of(numeral(7)), Term::one()}, {CheckMode::closed(), 1, {}}).holds());
  EXPECT_EQ(r.checks.size(), 4u);
  EXPECT_EQ(*separating_prime({}, 10).prime, 2u);
  EXPECT_FALSE(separating_prime({2}, 2).prime.has_value());
}

TEST(Ek, Examples) {
  EXPECT_TRUE(check_Ek(2, 5).all_hold());
  for (std::uint64_t p : {5u, 7u}) {
    const auto r = check_Ek(3, p);
    EXPECT_EQ(r.modulus, 2 * p);
    EXPECT_FALSE(r.all_hold());
    bool found = false;
    for (const auto& c : r.clauses) {
      if (c.label == "2 * 2^-1 = 1") {
        found = true;
        EXPECT_FALSE(c.holds);
      } else {
        EXPECT_TRUE(c.holds) << c.label;
      }
    }
    EXPECT_TRUE(found);
  }
  const auto z10 = make_meadow("zsf:10");
  EXPECT_EQ(z10->format(z10->inv(Residue(10, 2))), "8");
  EXPECT_THROW(check_Ek(3, 2), std::invalid_argument);
  EXPECT_THROW(check_Ek(5, 5), std::invalid_argument);
  EXPECT_THROW(check_Ek(2, 9), std::invalid_argument);
}

TEST(InitialEquality, Examples) {
  EXPECT_FALSE(bounded_initial_equality(parse_term("0^-1"), parse_term("0"), 100).distinct);
  const auto d = bounded_initial_equality(parse_term("2 * 2^-1"), parse_term("1"), 100);
  ASSERT_TRUE(d.distinct);
  EXPECT_EQ(*d.witness_meadow, "zp:2");
  EXPECT_FALSE(bounded_initial_equality(parse_term("3 * 3^-1 * 3"), parse_term("3"), 100).distinct);
  EXPECT_THROW(bounded_initial_equality(parse_term("x"), parse_term("x"), 10), std::invalid_argument);
}

TEST(FirstFailure, DeterministicAcrossWorkers) {
  const std::set<std::uint64_t> bad{4097, 9000, 123456};
  for (unsigned w : {1u, 2u, 5u, 8u}) {
    const auto r = detail::first_failure(200000, w, [&] { return [&](std::uint64_t i) { return bad.count(i) > 0; }; });
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, 4097u);
  }
  EXPECT_FALSE(detail::first_failure(1000, 3, [] { return [](std::uint64_t) { return false; }; }).has_value());
}
