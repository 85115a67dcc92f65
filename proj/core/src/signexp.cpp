#include "meadow/signexp.hpp"

#include <algorithm>

namespace meadow {

UnorderedMeadowError::UnorderedMeadowError(const std::string& meadow)
    : std::invalid_argument(meadow + " carries no ordering; signs are defined on q0 and products of q0") {}

bool is_ordered(const Meadow& m) {
  if (dynamic_cast<const RationalMeadow*>(&m)) return true;
  if (const auto* p = dynamic_cast<const ProductMeadow*>(&m)) {
    return std::all_of(p->factors().begin(), p->factors().end(), [](const MeadowPtr& f) { return is_ordered(*f); });
  }
  return false;
}

Value sign(const Meadow& m, const Value& x) {
  if (dynamic_cast<const RationalMeadow*>(&m)) {
    if (!x.is_rational()) throw ForeignValueError(m.descriptor(), "sign argument");
    return Rational(x.rational().sign());
  }
  if (const auto* p = dynamic_cast<const ProductMeadow*>(&m)) {
    if (!p->contains(x)) throw ForeignValueError(m.descriptor(), "sign argument");
    std::vector<Value> parts;
    for (std::size_t i = 0; i < p->factors().size(); ++i) parts.push_back(sign(*p->factors()[i], x.parts()[i]));
    return Value::tuple(std::move(parts));
  }
  throw UnorderedMeadowError(m.descriptor());
}

Interpretation sign_interpretation(const MeadowPtr& m) {
  if (!is_ordered(*m)) throw UnorderedMeadowError(m->descriptor());
  Interpretation interp;
  interp.functions["s"] = [m](const std::vector<Value>& args) { return sign(*m, args.at(0)); };
  return interp;
}

namespace {

std::vector<Rational> base_grid() {
  return {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
}

// Every tuple over `component` for each factor of an ordered meadow.
std::vector<Value> lift_grid(const Meadow& m, const std::vector<Rational>& component) {
  if (dynamic_cast<const RationalMeadow*>(&m)) return {component.begin(), component.end()};
  const auto* p = dynamic_cast<const ProductMeadow*>(&m);
  if (!p || !is_ordered(m)) throw UnorderedMeadowError(m.descriptor());
  std::vector<Value> acc{Value::tuple({})};
  for (const auto& f : p->factors()) {
    const auto sub = lift_grid(*f, component);
    std::vector<Value> next;
    for (const auto& prefix : acc) {
      for (const auto& v : sub) {
        auto parts = prefix.parts();
        parts.push_back(v);
        next.push_back(Value::tuple(std::move(parts)));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

std::vector<Value> default_sign_grid(const Meadow& m) { return lift_grid(m, base_grid()); }

std::vector<Value> parse_sign_grid(const Meadow& m, std::string_view csv) {
  std::vector<Rational> component;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    auto item = csv.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw std::invalid_argument("empty entry in grid list");
    component.push_back(Rational::parse(item));
    start = end + 1;
  }
  std::sort(component.begin(), component.end());
  component.erase(std::unique(component.begin(), component.end()), component.end());
  return lift_grid(m, component);
}

bool SignSuiteReport::holds() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.verdict.holds(); });
}

SignSuiteReport check_signs(const MeadowPtr& m, const std::vector<Value>& grid, std::uint64_t samples,
                            std::uint64_t seed, unsigned workers) {
  SignSuiteReport report;
  report.meadow = m->descriptor();
  report.seed = seed;
  report.grid_size = grid.size();
  const Interpretation interp = sign_interpretation(m);
  const Theory th = theories::signs();
  for (const auto& ne : th.equations) {
    report.verdicts.push_back(
        {ne.label, ne.equation, check_equation(*m, ne.equation, {CheckMode::over_grid(grid), workers, interp})});
  }
  if (samples > 0) {
    for (const auto& ne : th.equations) {
      report.verdicts.push_back({ne.label + " sampled", ne.equation,
                                 check_equation(*m, ne.equation, {CheckMode::sample(samples, seed), workers, interp})});
    }
  }
  return report;
}

std::vector<Rational> default_order_grid() { return base_grid(); }

std::vector<LawReport> check_order_axioms(const std::vector<Rational>& grid, unsigned workers) {
  const RationalMeadow q;
  const CheckOptions opt{CheckMode::over_grid({grid.begin(), grid.end()}), workers, {}};
  using Sides = std::optional<std::pair<Value, Value>>;
  // A violated implication reports its conclusion as 0 against the expected 1.
  auto broken = []() -> Sides { return std::make_pair(Value(Rational(0)), Value(Rational(1))); };
  auto r = [](const std::vector<Value>& v, std::size_t i) -> const Rational& { return v[i].rational(); };
  const Rational zero(0);

  std::vector<Law> laws;
  laws.push_back({"OF1: x != 0 -> (x < 0 or 0 < x)", {"x"}, [&](const std::vector<Value>& v) -> Sides {
                    const auto& x = r(v, 0);
                    if (x != zero && !(x < zero || zero < x)) return broken();
                    return std::nullopt;
                  }});
  laws.push_back({"OF2: x < y -> not (y < x or x = y)", {"x", "y"}, [&](const std::vector<Value>& v) -> Sides {
                    const auto &x = r(v, 0), &y = r(v, 1);
                    if (x < y && (y < x || x == y)) return broken();
                    return std::nullopt;
                  }});
  laws.push_back({"OF3: x < y -> x + z < y + z", {"x", "y", "z"}, [&](const std::vector<Value>& v) -> Sides {
                    const auto &x = r(v, 0), &y = r(v, 1), &z = r(v, 2);
                    if (x < y && !(x + z < y + z)) return broken();
                    return std::nullopt;
                  }});
  laws.push_back({"OF4: x < y and 0 < z -> x * z < y * z", {"x", "y", "z"}, [&](const std::vector<Value>& v) -> Sides {
                    const auto &x = r(v, 0), &y = r(v, 1), &z = r(v, 2);
                    if (x < y && zero < z && !(x * z < y * z)) return broken();
                    return std::nullopt;
                  }});
  std::vector<LawReport> out;
  for (const auto& law : laws) out.push_back({law.label, check_law(q, law, opt)});
  return out;
}

TheoryReport check_efr(const MeadowPtr& m, std::uint64_t max_n, unsigned workers) {
  const Theory th = theories::efr(max_n);
  if (m->is_finite()) return check_theory(*m, th, {CheckMode::exhaustive(), workers, {}});
  if (!is_ordered(*m)) throw UnorderedMeadowError(m->descriptor());
  // largest grid whose assignment count stays within budget; {0, 1} otherwise
  const std::vector<std::vector<Value>> grids{default_sign_grid(*m),
                                              lift_grid(*m, {Rational(-1), Rational(0), Rational(1)}),
                                              lift_grid(*m, {Rational(0), Rational(1)})};
  TheoryReport report{th.name, {}};
  for (const auto& ne : th.equations) {
    const std::size_t vars = free_vars(ne.equation).size();
    auto fits = [&](std::size_t points) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < vars; ++i) {
        if (count > kEfrGridBudget / points) return false;
        count *= points;
      }
      return true;
    };
    std::size_t pick = 0;
    while (pick + 1 < grids.size() && !fits(grids[pick].size())) ++pick;
    const auto& grid = grids[pick];
    report.verdicts.push_back({ne.label, ne.equation, check_equation(*m, ne.equation, {CheckMode::over_grid(grid), workers, {}})});
  }
  return report;
}

// ---------------------------------------------------------------------------
// The eq expansion of (Z/2Z)0 x (Z/3Z)0

MeadowPtr eq_base_meadow() { return make_meadow("prod:[zp:2,zp:3]"); }

Interpretation eq_interpretation(const MeadowPtr& m) {
  Interpretation interp;
  interp.functions["eq"] = [m](const std::vector<Value>& args) { return args.at(0) == args.at(1) ? m->one() : m->zero(); };
  return interp;
}

std::vector<Equation> eq_defining_equations() {
  std::vector<Equation> out;
  out.push_back({Term::app("eq", {Term::var("x"), Term::var("x")}), Term::one()});
  for (std::uint64_t i = 0; i <= 5; ++i) {
    for (std::uint64_t j = 0; j <= 5; ++j) {
      if (i != j) out.push_back({Term::app("eq", {numeral(i), numeral(j)}), Term::zero()});
    }
  }
  return out;
}

Equation eq_counterexample_equation() {
  const Term x = Term::var("x");
  return {Term::app("eq", {one_of(x), Term::one()}), one_of(x)};
}

bool EqMeadowReport::matches_expected() const {
  const bool defining_ok =
      std::all_of(defining.begin(), defining.end(), [](const auto& v) { return v.verdict.holds(); });
  return defining_ok && !counterexample.verdict.holds() && displayed_lhs == "<0,0>" && displayed_rhs == "<1,0>" &&
         expanded_congruences == 2 && reduct_congruences == 4 && expanded_simple && !reduct_subdirectly_irreducible &&
         inverse_of_displayed == "<1,0>" && !inverse_law.holds();
}

EqMeadowReport eq_meadow_checks(unsigned workers) {
  const MeadowPtr m = eq_base_meadow();
  const Interpretation interp = eq_interpretation(m);
  const CheckOptions opt{CheckMode::exhaustive(), workers, interp};
  EqMeadowReport report;
  for (const auto& e : eq_defining_equations()) report.defining.push_back({to_string(e), e, check_equation(*m, e, opt)});

  const Equation ce = eq_counterexample_equation();
  report.counterexample = {to_string(ce), ce, check_equation(*m, ce, opt)};
  const Value x = m->parse_value("<1,0>");
  report.displayed_x = m->format(x);
  report.displayed_lhs = m->format(eval(ce.lhs, *m, Assignment{{"x", x}}, interp));
  report.displayed_rhs = m->format(eval(ce.rhs, *m, Assignment{{"x", x}}, interp));

  const auto expanded = FiniteAlgebra::from_meadow(*m, interp);
  const auto reduct = FiniteAlgebra::from_meadow(*m);
  report.expanded_congruences = all_congruences(expanded, workers).size();
  report.reduct_congruences = all_congruences(reduct, workers).size();
  report.expanded_simple = is_simple(expanded, workers);
  report.reduct_subdirectly_irreducible = subdirectly_irreducible(reduct, workers).irreducible;
  report.inverse_of_displayed = m->format(m->inv(x));
  report.inverse_law = check_IL(*m, {CheckMode::exhaustive(), workers, {}});
  return report;
}

std::optional<Rational> sqrt2_rational_root() { return has_rational_root(parse_poly("x^2 - 2")); }

}  // namespace meadow
