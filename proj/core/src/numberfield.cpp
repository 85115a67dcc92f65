#include "meadow/numberfield.hpp"

#include <algorithm>
#include <thread>

namespace meadow {

// ---------------------------------------------------------------------------
// Normal forms in Q[x]/(g)

namespace {

Poly reduce(const Poly& p, const Poly& g) { return divmod(p, g).remainder; }

Poly nf_poly(const Term& t, const Poly& g, const std::string& constant) {
  if (auto n = t.numeral_value()) return reduce(Poly::constant(Rational(BigInt(static_cast<unsigned long>(*n)))), g);
  switch (t.kind()) {
    case TermKind::Zero: return Poly();
    case TermKind::One: return reduce(Poly::constant(1), g);
    case TermKind::Const:
      if (t.name() != constant) throw std::invalid_argument("unknown constant '" + t.name() + "' in a term over " + constant);
      return reduce(Poly::x(), g);
    case TermKind::Add: return nf_poly(t.arg(0), g, constant) + nf_poly(t.arg(1), g, constant);
    case TermKind::Neg: return -nf_poly(t.arg(0), g, constant);
    case TermKind::Mul: return reduce(nf_poly(t.arg(0), g, constant) * nf_poly(t.arg(1), g, constant), g);
    case TermKind::Inv: return inverse_mod(nf_poly(t.arg(0), g, constant), g);
    case TermKind::Var: throw std::invalid_argument("normal forms are defined for closed terms; found variable '" + t.name() + "'");
    case TermKind::App: throw std::invalid_argument("function symbol '" + t.name() + "' in a closed meadow term");
  }
  throw std::logic_error("unreachable term kind");
}

std::vector<Rational> to_vector(const Poly& p, std::size_t n) {
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = p.coeff(i);
  return out;
}

}  // namespace

std::vector<Rational> ext_normal_form(const Term& t, const Poly& g, const std::string& constant) {
  if (g.degree() < 1) throw std::invalid_argument("modulus polynomial must have degree >= 1");
  return to_vector(nf_poly(t, g, constant), static_cast<std::size_t>(g.degree()));
}

Term random_closed_term(SplitMix64& rng, const std::string& constant, const RandomTermOptions& opt) {
  const std::uint64_t numerals = opt.max_numeral >= 2 ? opt.max_numeral - 1 : 0;
  const std::uint64_t leaf_kinds = 2 + (constant.empty() ? 0 : 1) + numerals;
  auto leaf = [&]() -> Term {
    std::uint64_t k = rng.below(leaf_kinds);
    if (k == 0) return Term::zero();
    if (k == 1) return Term::one();
    if (!constant.empty() && k == 2) return Term::constant(constant);
    k -= constant.empty() ? 2 : 3;
    return numeral(k + 2);
  };
  const std::uint64_t total = opt.weight_add + opt.weight_mul + opt.weight_neg + opt.weight_inv + opt.weight_leaf;
  auto gen = [&](auto&& self, unsigned depth) -> Term {
    if (depth >= opt.max_depth) return leaf();
    std::uint64_t r = rng.below(total);
    if (r < opt.weight_add) {
      Term a = self(self, depth + 1);
      return Term::add(std::move(a), self(self, depth + 1));
    }
    r -= opt.weight_add;
    if (r < opt.weight_mul) {
      Term a = self(self, depth + 1);
      return Term::mul(std::move(a), self(self, depth + 1));
    }
    r -= opt.weight_mul;
    if (r < opt.weight_neg) return Term::neg(self(self, depth + 1));
    r -= opt.weight_neg;
    if (r < opt.weight_inv) return Term::inv(self(self, depth + 1));
    return leaf();
  };
  return gen(gen, 0);
}

// ---------------------------------------------------------------------------
// The single-equation specification

Poly single_spec_poly(std::uint64_t p0, std::uint64_t p1, std::uint64_t scale) {
  auto quad = [](std::uint64_t c) { return Poly({-Rational(BigInt(static_cast<unsigned long>(c))), Rational(0), Rational(1)}); };
  const BigInt prod = BigInt(static_cast<unsigned long>(p0)) * static_cast<unsigned long>(p1);
  const Poly q3({-Rational(prod), Rational(0), Rational(1)});
  return Rational(BigInt(static_cast<unsigned long>(scale))) * (quad(p0) * quad(p1) * q3);
}

Term poly_term(const Poly& f, const Term& at) {
  std::optional<Term> acc;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    const Rational& c = f.coeffs()[k];
    if (c.is_zero()) continue;
    if (!c.is_integer()) throw std::invalid_argument("poly_term needs integer coefficients");
    const BigInt mag = abs(c.num());
    if (!mag.fits_ulong_p() || mag.get_ui() > kMaxNumeralLiteral) throw std::invalid_argument("coefficient too large for a numeral");
    const std::uint64_t m = mag.get_ui();
    std::optional<Term> mono;
    if (k > 0) mono = power(at, static_cast<unsigned>(k));
    if (m != 1 || !mono) mono = mono ? Term::mul(numeral(m), *mono) : numeral(m);
    if (!acc) {
      acc = c.sign() < 0 ? Term::neg(*mono) : *mono;
    } else {
      acc = c.sign() < 0 ? sub(*acc, *mono) : Term::add(*acc, *mono);
    }
  }
  return acc ? *acc : Term::zero();
}

Equation single_spec_equation(const Poly& f, const std::string& var) {
  return {one_of(poly_term(f, Term::var(var))), Term::one()};
}

SingleSpecReport verify_single_spec(std::uint64_t p0, std::uint64_t p1, std::uint64_t prime_bound, unsigned workers) {
  if (!is_prime(p0) || !is_prime(p1)) throw std::invalid_argument("p0 and p1 must be primes");
  if (p0 == p1) throw std::invalid_argument("p0 and p1 must differ");
  SingleSpecReport report;
  report.p0 = p0;
  report.p1 = p1;
  report.bound = prime_bound;
  report.f = single_spec_poly(p0, p1);
  report.rational_root = has_rational_root(report.f);

  const auto primes = primes_up_to(prime_bound);
  const BigInt b0(static_cast<unsigned long>(p0)), b1(static_cast<unsigned long>(p1));
  const BigInt b01 = b0 * b1;

  struct PerPrime {
    std::optional<std::uint64_t> root;
    bool legendre = false;
    std::vector<std::string> problems;
  };
  std::vector<PerPrime> results(primes.size());
  auto work = [&](std::size_t i) {
    const std::uint64_t p = primes[i];
    PerPrime& r = results[i];
    r.root = first_root_mod_p(report.f, p);
    if (p == 2) {
      // Every coefficient of f is even.
      if (roots_mod_p(report.f, 2).size() != 2) r.problems.push_back("f is not identically 0 mod 2");
      return;
    }
    r.legendre = true;
    const int c0 = legendre(b0, p), c1 = legendre(b1, p), c01 = legendre(b01, p);
    if (c01 != c0 * c1) {
      r.problems.push_back("legendre(" + b01.get_str() + ") = " + std::to_string(c01) + " but the product of symbols is " +
                           std::to_string(c0 * c1));
    }
    const bool predicted = c0 >= 0 || c1 >= 0 || c01 >= 0;
    if (predicted != r.root.has_value()) {
      r.problems.push_back(std::string("scan ") + (r.root ? "found" : "found no") + " root but the symbols (" +
                           std::to_string(c0) + "," + std::to_string(c1) + "," + std::to_string(c01) + ") predict " +
                           (predicted ? "one" : "none"));
    }
    if (r.root) {
      const BigInt sq = BigInt(static_cast<unsigned long>(*r.root)) * static_cast<unsigned long>(*r.root);
      const bool explained = reduce_mod(sq - b0, p) == 0 || reduce_mod(sq - b1, p) == 0 || reduce_mod(sq - b01, p) == 0;
      if (!explained) r.problems.push_back("root " + std::to_string(*r.root) + " squares to none of p0, p1, p0*p1");
    }
  };
  const unsigned w = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, primes.size()))));
  if (w <= 1) {
    for (std::size_t i = 0; i < primes.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < w; ++id) {
      pool.emplace_back([&, id] {
        for (std::size_t i = id; i < primes.size(); i += w) work(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < primes.size(); ++i) {
    ++report.primes_checked;
    if (!results[i].root) report.primes_without_root.push_back(primes[i]);
    if (results[i].legendre) ++report.legendre_checked;
    for (auto& d : results[i].problems) report.discrepancies.push_back({primes[i], std::move(d)});
    if (report.sample_roots.size() < 10 && results[i].root) report.sample_roots.emplace_back(primes[i], *results[i].root);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Presentations

Presentation parse_presentation(std::string_view text) {
  auto file = parse_equation_file(text);
  return {std::move(file.constants), std::move(file.equations)};
}

Presentation load_presentation(const std::string& path) {
  auto file = load_equation_file(path);
  return {std::move(file.constants), std::move(file.equations)};
}

bool PresentationReport::relations_hold() const {
  return std::all_of(relations.begin(), relations.end(), [](const auto& r) { return r.verdict.holds(); });
}

namespace {

std::string show(const std::vector<Rational>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + "]";
}

}  // namespace

std::optional<Poly> minpoly_from_relations(const Presentation& pres) {
  if (pres.constants.size() != 1) return std::nullopt;
  for (const auto& r : pres.relations) {
    if (!free_vars(r).empty()) continue;
    try {
      const Poly f = term_to_poly(normalize_to_zero(r), pres.constants.front());
      if (f.degree() >= 1) return f.monic();
    } catch (const std::invalid_argument&) {
    }
  }
  return std::nullopt;
}

PresentationReport verify_presentation(const Presentation& pres, const std::optional<Poly>& minpoly,
                                       std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  if (pres.constants.size() > 1) throw std::invalid_argument("presentations with more than one constant are not supported");
  const std::string constant = pres.constants.empty() ? "" : pres.constants.front();
  if (!constant.empty() && !minpoly) throw std::invalid_argument("a presentation with a constant needs its minimal polynomial");
  for (const auto& r : pres.relations) {
    for (const auto& c : constants_of(r.lhs)) {
      if (c != constant) throw std::invalid_argument("relation uses undeclared constant '" + c + "'");
    }
    for (const auto& c : constants_of(r.rhs)) {
      if (c != constant) throw std::invalid_argument("relation uses undeclared constant '" + c + "'");
    }
  }

  // Without a constant, Q[x]/(x) stands in for Q0.
  const Poly g = constant.empty() ? Poly::x() : *minpoly;
  MeadowPtr m;
  if (constant.empty()) {
    m = std::make_shared<RationalMeadow>();
  } else {
    m = std::make_shared<ExtensionMeadow>(g, constant);
  }

  PresentationReport report;
  report.meadow = m->descriptor();
  report.seed = seed;
  report.trials = trials;
  for (const auto& r : pres.relations) {
    const bool closed = free_vars(r).empty();
    const CheckMode mode = closed ? CheckMode::closed() : CheckMode::sample(kRelationSamples, seed);
    report.relations.push_back({r, mode, check_equation(*m, r, {mode, workers, {}})});
  }

  struct Trial {
    bool normalized = false;
    bool zero = false;
    bool roundtrip = false;
    std::string failure;
  };
  std::vector<Trial> results(trials);
  const std::size_t n = static_cast<std::size_t>(g.degree());
  std::vector<Rational> one(n);
  one[0] = Rational(1);
  const ExtensionMeadow arith(g, constant.empty() ? "c" : constant);
  auto run = [&](std::uint64_t k) {
    SplitMix64 rng(derive_seed(seed, k));
    const Term t = random_closed_term(rng, constant);
    Trial& out = results[k];
    try {
      const auto nf = ext_normal_form(t, g, constant);
      out.normalized = nf.size() == n;
      out.zero = std::all_of(nf.begin(), nf.end(), [](const Rational& c) { return c.is_zero(); });
      if (!out.zero) {
        out.roundtrip = true;
        const auto nf_inv = ext_normal_form(Term::inv(t), g, constant);
        const Value prod = arith.mul(ExtValue{nf}, ExtValue{nf_inv});
        if (prod.ext().coeffs != one) {
          out.failure = "trial " + std::to_string(k) + ": nf(t) * nf(t^-1) = " + show(prod.ext().coeffs);
          return;
        }
        const auto nf_unit = ext_normal_form(one_of(t), g, constant);
        if (nf_unit != one) out.failure = "trial " + std::to_string(k) + ": nf(t * t^-1) = " + show(nf_unit);
      }
    } catch (const std::exception& e) {
      out.failure = "trial " + std::to_string(k) + ": " + e.what();
    }
  };
  const unsigned w = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::uint64_t>(1, trials))));
  if (w <= 1) {
    for (std::uint64_t k = 0; k < trials; ++k) run(k);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < w; ++id) {
      pool.emplace_back([&, id] {
        for (std::uint64_t k = id; k < trials; k += w) run(k);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (const auto& r : results) {
    report.normalized += r.normalized;
    report.zero_forms += r.zero;
    report.roundtrips += r.roundtrip;
    if (!r.failure.empty()) report.failures.push_back(r.failure);
  }
  return report;
}

}  // namespace meadow
