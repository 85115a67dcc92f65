#include <gtest/gtest.h>

#include "meadow/numberfield.hpp"
#include "meadow/poly.hpp"
#include "oracles.hpp"

using namespace meadow;

namespace {
Rational q(const char* s) { return Rational::parse(s); }
const Poly kGauss = parse_poly("x^2 + 1");
const auto kGaussSig = Signature::standard().with_constants({"i"});
}  // namespace

TEST(Poly, Arithmetic) {
  const Poly a = parse_poly("x^2 - 1");
  const Poly b = parse_poly("x + 1");
  const auto dm = divmod(a, b);
  EXPECT_EQ(dm.quotient, parse_poly("x - 1"));
  EXPECT_TRUE(dm.remainder.is_zero());
  EXPECT_EQ(a.eval(Rational(3)), Rational(8));
  EXPECT_EQ(parse_poly("2*x^6 - 22*x^4 + 72*x^2 - 72"), single_spec_poly(2, 3));
  EXPECT_EQ(single_spec_poly(2, 3, 1).str(), "x^6 - 11*x^4 + 36*x^2 - 36");
  EXPECT_THROW(parse_poly("x * y"), std::invalid_argument);
  EXPECT_THROW(divmod(a, Poly()), std::domain_error);
}

TEST(ExtGcd, BezoutIdentity) {
  const std::vector<std::pair<const char*, const char*>> pairs{
      {"x", "x^2 + 1"}, {"x^2 + 1", "x^2 + 1"}, {"0", "x^2 + 1"}, {"x^3 - 1", "x^2 - 1"},
      {"3*x^4 + 2*x - 7", "x^3 - 2"}, {"x + 1/2", "x^5 + x + 1"}};
  for (const auto& [ps, gs] : pairs) {
    const Poly p = parse_poly(ps), g = parse_poly(gs);
    const auto r = poly_ext_gcd(p, g);
    EXPECT_EQ(r.h * g + r.h_prime * p, r.gcd) << ps << " , " << gs;
    EXPECT_EQ(r.gcd.lead(), Rational(1));
  }
  EXPECT_EQ(poly_ext_gcd(parse_poly("x"), kGauss).gcd, Poly::constant(1));
  EXPECT_EQ(poly_ext_gcd(kGauss, kGauss).gcd, kGauss);
  EXPECT_EQ(poly_ext_gcd(Poly(), parse_poly("2*x^2 + 2")).gcd, kGauss);
  EXPECT_EQ(poly_ext_gcd(parse_poly("x^3 - 1"), parse_poly("x^2 - 1")).gcd, parse_poly("x - 1"));
}

TEST(RationalRoot, Examples) {
  EXPECT_FALSE(has_rational_root(single_spec_poly(2, 3)).has_value());
  EXPECT_EQ(has_rational_root(parse_poly("x^2 - 4")), std::optional<Rational>(Rational(-2)));
  EXPECT_FALSE(has_rational_root(single_spec_poly(2, 3, 1)).has_value());
  EXPECT_EQ(has_rational_root(parse_poly("6*x^2 - 5*x + 1")), std::optional<Rational>(q("1/3")));
  EXPECT_THROW(has_rational_root(Poly()), std::invalid_argument);
}

TEST(RootsModP, Examples) {
  const Poly f = single_spec_poly(2, 3);
  const auto r5 = roots_mod_p(f, 5);
  EXPECT_NE(std::find(r5.begin(), r5.end(), 1u), r5.end());
  const auto r7 = roots_mod_p(f, 7);
  EXPECT_NE(std::find(r7.begin(), r7.end(), 3u), r7.end());
  EXPECT_TRUE(roots_mod_p(kGauss, 3).empty());
  EXPECT_THROW(roots_mod_p(kGauss, 9), std::invalid_argument);
  EXPECT_EQ(roots_mod_p(f, 2).size(), 2u);
}

TEST(NormalForm, Examples) {
  EXPECT_EQ(ext_normal_form(parse_term("i * i * i", kGaussSig), kGauss, "i"), (std::vector<Rational>{0, -1}));
  EXPECT_EQ(ext_normal_form(parse_term("(1 + i)^-1", kGaussSig), kGauss, "i"),
            (std::vector<Rational>{q("1/2"), q("-1/2")}));
  EXPECT_EQ(ext_normal_form(parse_term("0^-1"), kGauss, "i"), (std::vector<Rational>{0, 0}));
  EXPECT_THROW(ext_normal_form(parse_term("x"), kGauss, "i"), std::invalid_argument);
  const Poly red = parse_poly("(x^2 + 1) * (x^2 + 2)");
  const auto sig = Signature::standard().with_constants({"c"});
  EXPECT_THROW(ext_normal_form(parse_term("(c * c + 1)^-1", sig), red, "c"), ReducibleModulusError);
}

TEST(NormalForm, AgreesWithGaussianOracle) {
  SplitMix64 rng(2024);
  for (int k = 0; k < 1500; ++k) {
    const Term t = random_closed_term(rng, "i");
    const auto nf = ext_normal_form(t, kGauss, "i");
    const auto g = oracle::gaussian_eval(t, "i");
    ASSERT_EQ(nf, (std::vector<Rational>{g.a, g.b})) << to_string(t);
  }
}

TEST(NormalForm, Homomorphism) {
  const Poly g = parse_poly("x^3 - 2");
  const ExtensionMeadow e(g);
  SplitMix64 rng(5);
  RandomTermOptions opt;
  opt.max_depth = 6;
  auto val = [&](const std::vector<Rational>& v) { return Value(ExtValue{v}); };
  for (int k = 0; k < 300; ++k) {
    const Term t = random_closed_term(rng, "c", opt);
    const Term u = random_closed_term(rng, "c", opt);
    const auto nt = ext_normal_form(t, g), nu = ext_normal_form(u, g);
    ASSERT_EQ(val(ext_normal_form(Term::add(t, u), g)), e.add(val(nt), val(nu)));
    ASSERT_EQ(val(ext_normal_form(Term::mul(t, u), g)), e.mul(val(nt), val(nu)));
    ASSERT_EQ(val(ext_normal_form(Term::neg(t), g)), e.neg(val(nt)));
    ASSERT_EQ(val(ext_normal_form(Term::inv(t), g)), e.inv(val(nt)));
  }
}

TEST(RandomTerms, DeterministicAndClosed) {
  SplitMix64 a(11), b(11);
  for (int k = 0; k < 50; ++k) {
    const Term t = random_closed_term(a, "c");
    ASSERT_EQ(t, random_closed_term(b, "c"));
    ASSERT_TRUE(t.is_closed());
    // numeral leaves are nested sums of ones
    const RandomTermOptions opt;
    ASSERT_LE(t.depth(), opt.max_depth + opt.max_numeral + 1);
  }
}

TEST(SingleSpec, Examples) {
  const auto r = verify_single_spec(2, 3, 100);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.primes_checked, 25u);
  EXPECT_EQ(r.legendre_checked, 24u);
  EXPECT_TRUE(verify_single_spec(3, 5, 100).passed());
  EXPECT_TRUE(verify_single_spec(2, 3, 2).passed());
  EXPECT_THROW(verify_single_spec(3, 3, 100), std::invalid_argument);
  EXPECT_THROW(verify_single_spec(4, 3, 100), std::invalid_argument);
}

TEST(SingleSpec, RootScanMatchesResidueOracle) {
  // A root mod odd p exists iff one of p0, p1, p0*p1 is a square mod p
  // (or divisible by p), by enumeration of squares.
  const std::uint64_t p0 = 5, p1 = 7;
  const Poly f = single_spec_poly(p0, p1);
  for (auto p : primes_up_to(300)) {
    if (p == 2) continue;
    const auto sq = oracle::squares_mod(p);
    bool expected = false;
    for (std::uint64_t a : {p0, p1, p0 * p1}) expected = expected || a % p == 0 || sq.count(a % p);
    ASSERT_EQ(!roots_mod_p(f, p).empty(), expected) << p;
    ASSERT_TRUE(expected) << p;
  }
}

TEST(SingleSpec, WorkerIndependent) {
  const auto a = verify_single_spec(2, 3, 3000, 1);
  const auto b = verify_single_spec(2, 3, 3000, 4);
  EXPECT_EQ(a.sample_roots, b.sample_roots);
  EXPECT_EQ(a.primes_checked, b.primes_checked);
}

TEST(Presentation, Gaussian) {
  const auto pres = parse_presentation(
      "const i\ni * i + 1 = 0\n(x*x - 2) * (x*x - 3) * (x*x - 6) * ((x*x - 2) * (x*x - 3) * (x*x - 6))^-1 = 1\n");
  EXPECT_EQ(minpoly_from_relations(pres), std::optional<Poly>(kGauss));
  const auto r = verify_presentation(pres, kGauss, 1000, 0);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.normalized, 1000u);
  EXPECT_EQ(r.roundtrips + r.zero_forms, 1000u);
  ASSERT_EQ(r.relations.size(), 2u);
  EXPECT_EQ(r.relations[0].mode.kind, CheckMode::Kind::Closed);
  EXPECT_EQ(r.relations[1].verdict.status, Verdict::Status::HoldsSampled);
  EXPECT_EQ(r.relations[1].verdict.samples, kRelationSamples);
}

TEST(Presentation, FEquationFailsAtSqrt2) {
  const auto pres = parse_presentation(
      "const c\nc * c - 2 = 0\n(x*x - 2) * (x*x - 3) * (x*x - 6) * ((x*x - 2) * (x*x - 3) * (x*x - 6))^-1 = 1\n");
  const auto r = verify_presentation(pres, parse_poly("x^2 - 2"), 20, 0);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(r.relations[0].verdict.holds());
  const auto& f = r.relations[1].verdict;
  ASSERT_FALSE(f.holds());
  const ExtensionMeadow e(parse_poly("x^2 - 2"));
  const Value w = f.witness->assignment[0].second;
  EXPECT_TRUE(w == e.generator() || w == e.neg(e.generator()));
}

TEST(Presentation, Trivial) {
  const auto r = verify_presentation(Presentation{}, std::nullopt, 50, 0);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.meadow, "q0");
}

TEST(Presentation, Malformed) {
  EXPECT_THROW(verify_presentation(parse_presentation("const a, b\n"), kGauss, 1, 0), std::invalid_argument);
  EXPECT_THROW(verify_presentation(parse_presentation("const i\n"), std::nullopt, 1, 0), std::invalid_argument);
}
