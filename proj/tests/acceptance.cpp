// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "meadow/congruence.hpp"
#include "meadow/modelcheck.hpp"
#include "meadow/numberfield.hpp"
#include "meadow/report.hpp"
#include "meadow/signexp.hpp"
#include "oracles.hpp"

using namespace meadow;
using report::Json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> reports;  // serialized JSON reports produced along the way

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
  void keep(const Json& j) { reports.push_back(report::dump(j)); }
};

CheckOptions exhaustive(unsigned w) { return {CheckMode::exhaustive(), w, {}}; }

Outcome md_suite(unsigned w) {
  Outcome o;
  for (const char* d : {"zp:2", "zp:3", "zp:5", "zp:7", "zp:11", "zp:13", "zsf:6", "zsf:10", "zsf:15", "zsf:30"}) {
    const auto m = make_meadow(d);
    const auto r = check_theory(*m, theories::md(), exhaustive(w));
    o.keep(report::theory("axioms", *m, r, CheckMode::exhaustive()));
    for (const auto& v : r.verdicts) {
      o.require(v.verdict.status == Verdict::Status::HoldsExhaustive, std::string(d) + " " + v.label);
    }
  }
  return o;
}

Outcome non_squarefree(unsigned) {
  Outcome o;
  for (std::uint64_t n : {4u, 8u, 9u, 12u}) {
    try {
      make_meadow("zsf:" + std::to_string(n));
      o.require(false, "zsf:" + std::to_string(n) + " was accepted");
    } catch (const NotSquarefreeError& e) {
      const auto bad = oracle::brute_non_regular(n);
      const bool genuine = std::find(bad.begin(), bad.end(), e.witness()) != bad.end();
      o.require(genuine, "witness " + std::to_string(e.witness()) + " has a weak inverse mod " + std::to_string(n));
      o.keep(Json{{"operation", "make_meadow"}, {"modulus", n}, {"witness", e.witness()}});
      if (n == 4) o.require(e.witness() == 2, "witness in Z/4Z is not 2");
    }
  }
  return o;
}

Outcome il_counterexample(unsigned w) {
  Outcome o;
  const auto m = make_meadow("prod:[zp:2,zp:3]");
  const auto v = check_IL(*m, exhaustive(w));
  o.keep(report::inverse_law(*m, CheckMode::exhaustive(), v));
  o.require(!v.holds() && v.witness, "IL did not fail");
  if (!o.pass) return o;
  const Value x = v.witness->assignment.at(0).second;
  o.require(m->format(x) == "<0,1>", "witness " + m->format(x));
  o.require(m->format(m->mul(x, m->inv(x))) == "<0,1>", "x * x^-1 != <0,1>");
  o.require(m->format(v.witness->lhs) == "<0,1>" && m->format(v.witness->rhs) == "<1,1>", "witness sides");
  return o;
}

Outcome simplicity(unsigned w) {
  Outcome o;
  auto count = [&](const char* d) {
    const auto m = make_meadow(d);
    const auto alg = FiniteAlgebra::from_meadow(*m);
    const auto lattice = all_congruences(alg, w);
    o.keep(report::congruences(*m, alg, "meadow", lattice, is_simple(alg, w), subdirectly_irreducible(alg, w),
                               std::nullopt, std::nullopt));
    if (m->size() <= 7) {
      o.require(oracle::partition_filter_congruences(*m).size() == lattice.size(),
                std::string("partition oracle disagrees on ") + d);
    }
    return lattice.size();
  };
  for (const char* d : {"zp:2", "zp:3", "zp:5", "zp:7"}) o.require(count(d) == 2, std::string(d) + " count");
  o.require(count("zsf:6") == 4, "zsf:6 count");
  o.require(count("zsf:30") == 8, "zsf:30 count");
  for (const char* d : {"prod:[zp:2,zp:3]", "prod:[zp:2,zp:2]", "gen:[prod:[zp:2,zp:2]]"}) count(d);
  for (const char* d : {"zp:2", "zp:3", "zp:5", "zp:7", "zp:11", "zp:13", "zsf:6", "zsf:10", "zsf:15", "zsf:30",
                        "prod:[zp:2,zp:3]", "prod:[zp:2,zp:2]", "prod:[zp:3,zp:5]", "gen:[prod:[zp:2,zp:2]]"}) {
    const auto m = make_meadow(d);
    const bool il = check_IL(*m, exhaustive(w)).holds();
    o.require(is_simple(FiniteAlgebra::from_meadow(*m), w) == il, std::string("simple != IL on ") + d);
  }
  return o;
}

Outcome single_spec(unsigned w) {
  Outcome o;
  const auto r = verify_single_spec(2, 3, 10000, w);
  o.keep(report::single_spec(r));
  o.require(!r.rational_root, "f has a rational root");
  o.require(r.primes_checked == primes_up_to(10000).size(), "not every prime was scanned");
  o.require(r.primes_without_root.empty(), "a prime without a root");
  o.require(r.legendre_checked + 1 == r.primes_checked, "Legendre check skipped an odd prime");
  o.require(r.discrepancies.empty(), "Legendre discrepancy");
  return o;
}

Outcome combiner(unsigned w) {
  Outcome o;
  const std::vector<Equation> pool{parse_equation("x = 0"), parse_equation("y = 0"), parse_equation("x - x = 0"),
                                   parse_equation("x * 0 = 0"), parse_equation("1_(x) * x - x = 0")};
  for (const char* d : {"zsf:6", "zsf:30"}) {
    const auto m = make_meadow(d);
    auto run = [&](const std::vector<Equation>& eqs) {
      const Equation combined = reduce_to_single(eqs);
      const auto v = check_law(*m, equivalence_law(*m, eqs, combined), exhaustive(w));
      o.keep(report::combine(eqs, combined, std::make_pair(m.get(), v)));
      o.require(v.status == Verdict::Status::HoldsExhaustive, std::string(d) + ": " + to_string(combined));
    };
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = 0; j < pool.size(); ++j) run({pool[i], pool[j]});
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        for (std::size_t k = j + 1; k < pool.size(); ++k) run({pool[i], pool[j], pool[k]});
      }
    }
  }
  return o;
}

Outcome gaussian(unsigned w) {
  Outcome o;
  const auto pres = parse_presentation(
      "const i\n"
      "i * i + 1 = 0\n"
      "(x*x - 2) * (x*x - 3) * (x*x - 6) * ((x*x - 2) * (x*x - 3) * (x*x - 6))^-1 = 1\n");
  const auto r = verify_presentation(pres, parse_poly("x^2 + 1"), 1000, 0, w);
  o.keep(report::presentation(r, 1000));
  o.require(r.normalized == 1000, "not every term normalized");
  o.require(r.failures.empty(), r.failures.empty() ? "" : r.failures.front());
  o.require(r.roundtrips + r.zero_forms == 1000, "round trips missing");
  o.require(r.relations.size() == 2, "relations");
  if (!o.pass) return o;
  o.require(r.relations[0].verdict.holds(), "g(i) = 0 fails");
  const auto& f = r.relations[1].verdict;
  o.require(f.status == Verdict::Status::HoldsSampled && f.samples == 200, "f-equation: " + f.status_name());
  return o;
}

Outcome signs_suite(unsigned w) {
  Outcome o;
  for (const char* d : {"q0", "prod:[q0,q0]"}) {
    const auto m = make_meadow(d);
    const auto r = check_signs(m, default_sign_grid(*m), kSignSamples, 0, w);
    const auto efr = check_efr(m, 5, w);
    std::vector<LawReport> order;
    if (std::string(d) == "q0") order = check_order_axioms(default_order_grid(), w);
    o.keep(report::signs(r, order, efr, m));
    for (const auto& v : r.verdicts) {
      if (v.label.find("sampled") == std::string::npos) {
        o.require(v.verdict.status == Verdict::Status::HoldsGrid, std::string(d) + " " + v.label);
      } else {
        o.require(v.verdict.holds(), std::string(d) + " " + v.label);
      }
    }
    for (const auto& l : order) o.require(l.verdict.holds(), l.label);
    o.require(efr.holds(), std::string("EFR on ") + d);
  }
  const auto z2 = make_meadow("zp:2");
  const auto efr = check_efr(z2, 1, w);
  o.keep(report::theory("axioms", *z2, efr, CheckMode::exhaustive()));
  o.require(efr.verdicts.size() == 2 && !efr.verdicts[1].verdict.holds(), "EFR n=1 holds on zp:2");
  if (!o.pass) return o;
  const auto& a = efr.verdicts[1].verdict.witness->assignment;
  o.require(z2->format(a.at(0).second) == "1" && z2->format(a.at(1).second) == "1", "EFR witness");
  return o;
}

Outcome eq_expansion(unsigned w) {
  Outcome o;
  const auto r = eq_meadow_checks(w);
  o.keep(report::eq_meadow(r));
  o.require(!r.counterexample.verdict.holds(), "counterexample equation holds");
  o.require(r.displayed_x == "<1,0>" && r.displayed_lhs == "<0,0>" && r.displayed_rhs == "<1,0>", "displayed values");
  o.require(r.expanded_congruences == 2, "expanded count " + std::to_string(r.expanded_congruences));
  o.require(r.reduct_congruences == 4, "reduct count " + std::to_string(r.reduct_congruences));
  o.require(r.matches_expected(), "eq-expansion report");
  return o;
}

Outcome witnesses(unsigned w) {
  Outcome o;
  const auto sp = separating_prime({2, 3, 5}, 100);
  o.keep(report::separating_prime(sp));
  o.require(sp.prime == std::optional<std::uint64_t>(7), "separating prime");
  if (!o.pass) return o;
  const auto z7 = make_meadow("zp:7");
  const CheckOptions closed{CheckMode::closed(), w, {}};
  for (std::uint64_t q : {2u, 3u, 5u}) {
    o.require(check_equation(*z7, {one_of(numeral(q)), Term::one()}, closed).holds(), "q invertible mod 7");
  }
  o.require(!check_equation(*z7, {one_of(numeral(7)), Term::one()}, closed).holds(), "7 invertible mod 7");

  const auto qq = make_meadow("prod:[q0,q0]");
  const auto inv = check_theory(*qq, theories::inv_p(50), closed);
  o.keep(report::theory("axioms", *qq, inv, CheckMode::closed()));
  o.require(inv.holds(), "Inv_P fails on q0 x q0");
  const CheckMode mode = CheckMode::sample(1000, 0);
  const auto il = check_IL(*qq, {mode, w, {}});
  o.keep(report::inverse_law(*qq, mode, il));
  o.require(!il.holds(), "IL holds on q0 x q0");
  if (il.witness) o.require(qq->format(il.witness->assignment.at(0).second) == "<1,0>", "IL witness");
  return o;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome(unsigned)> run;
};

std::vector<Criterion> criteria() {
  return {
      {1, "meadow axioms hold exhaustively on prime fields and squarefree rings", md_suite},
      {2, "non-squarefree moduli rejected with a non-regular witness", non_squarefree},
      {3, "inverse law fails on (Z/2)0 x (Z/3)0 at <0,1>", il_counterexample},
      {4, "congruence counts, simplicity iff inverse law, partition oracle", simplicity},
      {5, "single-equation specification verified for primes up to 10000", single_spec},
      {6, "combined equations equivalent to their conjunction", combiner},
      {7, "Q0(i) presentation: normal forms and inverse round trips", gaussian},
      {8, "sign, order and formal realness axioms", signs_suite},
      {9, "eq-expansion counterexample and congruence counts", eq_expansion},
      {10, "separating prime and the q0 x q0 witness", witnesses},
  };
}

}  // namespace

int main() {
  bool all = true;
  std::vector<std::string> first_run;
  auto report_line = [&](int id, const std::string& name, const Outcome& o, double secs) {
    std::printf("[%s] %2d %s (%.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), secs,
                o.pass ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  };

  for (const auto& c : criteria()) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(1);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    first_run.insert(first_run.end(), o.reports.begin(), o.reports.end());
    report_line(c.id, c.name, o, secs);
  }

  // Criterion 11: every report again with one worker, then with eight.
  {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      for (unsigned w : {1u, 8u}) {
        std::vector<std::string> again;
        for (const auto& c : criteria()) {
          const auto r = c.run(w);
          again.insert(again.end(), r.reports.begin(), r.reports.end());
        }
        o.require(again.size() == first_run.size(), "report count differs with workers=" + std::to_string(w));
        for (std::size_t i = 0; i < again.size() && i < first_run.size(); ++i) {
          o.require(again[i] == first_run[i], "report " + std::to_string(i) + " differs with workers=" + std::to_string(w));
        }
      }
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report_line(11, "JSON reports byte-identical across runs and worker counts (" + std::to_string(first_run.size()) +
                        " reports)",
                o, secs);
  }
  return all ? 0 : 1;
}
