#include "meadow/report.hpp"

namespace meadow::report {

namespace {

Json equations_json(const std::vector<Equation>& eqs) {
  Json arr = Json::array();
  for (const auto& e : eqs) arr.push_back(to_string(e));
  return arr;
}

Json theory_verdicts(const Meadow& m, const TheoryReport& r) {
  Json arr = Json::array();
  for (const auto& v : r.verdicts) arr.push_back(verdict(m, v.label, to_string(v.equation), v.verdict));
  return arr;
}

}  // namespace

Json witness(const Meadow& m, const Witness& w) {
  Json assignment = Json::object();
  for (const auto& [name, value] : w.assignment) assignment[name] = m.format(value);
  return Json{{"assignment", assignment}, {"lhs", m.format(w.lhs)}, {"rhs", m.format(w.rhs)}};
}

Json verdict(const Meadow& m, const std::string& label, const std::string& equation, const Verdict& v) {
  Json j = Json::object();
  if (!label.empty()) j["label"] = label;
  j["equation"] = equation;
  j["status"] = v.status_name();
  if (v.witness) j["witness"] = witness(m, *v.witness);
  j["assignments_checked"] = v.assignments_checked;
  return j;
}

Json envelope(const std::string& operation, const std::string& meadow, const std::string& subject_key,
              const std::string& subject, const CheckMode& mode) {
  Json j = Json::object();
  j["operation"] = operation;
  j["meadow"] = meadow;
  j[subject_key] = subject;
  j["mode"] = mode.name();
  if (mode.kind == CheckMode::Kind::Sample) {
    j["seed"] = mode.seed;
    j["samples"] = mode.count;
  }
  j["verdicts"] = Json::array();
  return j;
}

Json check(const Meadow& m, const Equation& e, const CheckMode& mode, const Verdict& v) {
  Json j = envelope("check", m.descriptor(), "equation", to_string(e), mode);
  j["verdicts"].push_back(verdict(m, "", to_string(e), v));
  j["passed"] = v.holds();
  return j;
}

Json inverse_law(const Meadow& m, const CheckMode& mode, const Verdict& v) {
  const std::string law = "x != 0 -> x * x^-1 = 1";
  Json j = envelope("check", m.descriptor(), "equation", law, mode);
  j["verdicts"].push_back(verdict(m, "IL", law, v));
  j["passed"] = v.holds();
  return j;
}

Json theory(const std::string& operation, const Meadow& m, const TheoryReport& r, const CheckMode& mode) {
  Json j = envelope(operation, m.descriptor(), "theory", r.theory, mode);
  j["verdicts"] = theory_verdicts(m, r);
  j["passed"] = r.holds();
  return j;
}

Json combine(const std::vector<Equation>& inputs, const Equation& combined,
             const std::optional<std::pair<const Meadow*, Verdict>>& equivalence) {
  Json j = Json::object();
  j["operation"] = "combine";
  j["inputs"] = equations_json(inputs);
  j["combined"] = to_string(combined);
  if (equivalence) {
    const auto& [m, v] = *equivalence;
    j["meadow"] = m->descriptor();
    j["mode"] = "exhaustive";
    j["verdicts"] = Json::array({verdict(*m, "equivalence", "combined <-> conjunction", v)});
    j["passed"] = v.holds();
  } else {
    j["passed"] = true;
  }
  return j;
}

Json initial_spec(const std::vector<Equation>& eqs, const InitialSpecReport& r) {
  Json j = Json::object();
  j["operation"] = "initial";
  j["theory"] = equations_json(eqs);
  j["mode"] = "exhaustive";
  j["prime_bound"] = r.bound;
  Json arr = Json::array();
  for (const auto& pc : r.primes) {
    const ModularMeadow m(pc.prime, true);
    Json e = Json::object();
    e["prime"] = pc.prime;
    e["model"] = pc.model;
    if (pc.failing_equation) e["failing_equation"] = to_string(eqs[*pc.failing_equation]);
    if (pc.witness) e["witness"] = witness(m, *pc.witness);
    arr.push_back(e);
  }
  j["primes"] = arr;
  if (r.refuting_prime) {
    j["conclusion"] = "refuted";
    j["refuting_prime"] = *r.refuting_prime;
  } else {
    j["conclusion"] = "fails in every prime field up to the bound";
  }
  j["passed"] = !r.refuted();
  return j;
}

Json separating_prime(const SeparatingPrimeReport& r) {
  Json j = Json::object();
  j["operation"] = "sep-prime";
  j["excluded"] = r.excluded;
  j["bound"] = r.bound;
  j["mode"] = "closed";
  if (r.prime) {
    const ModularMeadow m(*r.prime, true);
    j["meadow"] = m.descriptor();
    j["prime"] = *r.prime;
    Json arr = Json::array();
    for (const auto& c : r.checks) arr.push_back(verdict(m, c.label, to_string(c.equation), c.verdict));
    j["verdicts"] = arr;
  } else {
    j["prime"] = nullptr;
    j["verdicts"] = Json::array();
  }
  j["passed"] = r.prime.has_value();
  return j;
}

Json ek(const EkReport& r) {
  Json j = Json::object();
  j["operation"] = "ek-check";
  j["meadow"] = "zsf:" + std::to_string(r.modulus);
  j["k"] = r.k;
  j["p"] = r.p;
  j["a"] = r.p;
  Json arr = Json::array();
  for (const auto& c : r.clauses) arr.push_back(Json{{"clause", c.label}, {"holds", c.holds}, {"detail", c.detail}});
  j["clauses"] = arr;
  j["passed"] = r.all_hold();
  return j;
}

Json initial_equality(const Term& s, const Term& t, const InitialEqualityReport& r) {
  Json j = Json::object();
  j["operation"] = "initial-equality";
  j["equation"] = to_string(Equation{s, t});
  j["prime_bound"] = r.bound;
  j["meadows_checked"] = r.meadows_checked;
  if (r.distinct) {
    j["conclusion"] = "provably distinct in the initial meadow";
    j["witness"] = Json{{"meadow", *r.witness_meadow}, {"lhs", r.lhs_value}, {"rhs", r.rhs_value}};
  } else {
    j["conclusion"] = "equal up to bound";
  }
  j["passed"] = !r.distinct;
  return j;
}

Json congruences(const Meadow& m, const FiniteAlgebra& alg, const std::string& signature,
                 const std::vector<Congruence>& lattice, bool simple, const SubdirectIrreducibility& si,
                 const std::optional<SubdirectDecomposition>& decomposition,
                 const std::optional<std::pair<std::string, Congruence>>& principal) {
  Json j = Json::object();
  j["operation"] = "congruences";
  j["meadow"] = m.descriptor();
  j["signature"] = signature;
  j["carrier"] = alg.labels();
  Json arr = Json::array();
  for (const auto& c : lattice) arr.push_back(c.str(alg.labels()));
  j["count"] = lattice.size();
  j["congruences"] = arr;
  j["simple"] = simple;
  j["subdirectly_irreducible"] = si.irreducible;
  if (si.monolith) j["monolith"] = si.monolith->str(alg.labels());
  if (principal) j["principal"] = Json{{"pair", principal->first}, {"congruence", principal->second.str(alg.labels())}};
  if (decomposition) {
    Json d = Json::object();
    Json fs = Json::array();
    for (const auto& f : decomposition->factors) {
      fs.push_back(Json{{"kernel", f.kernel.str(alg.labels())}, {"size", f.algebra.size()}, {"carrier", f.algebra.labels()}});
    }
    d["factors"] = fs;
    Json emb = Json::object();
    for (std::size_t x = 0; x < alg.size(); ++x) {
      std::string tuple = "<";
      for (std::size_t i = 0; i < decomposition->embedding[x].size(); ++i) {
        if (i) tuple += ",";
        tuple += decomposition->factors[i].algebra.labels()[decomposition->embedding[x][i]];
      }
      emb[alg.labels()[x]] = tuple + ">";
    }
    d["embedding"] = emb;
    d["kernels_meet_to_diagonal"] = decomposition->kernels_meet_to_diagonal;
    d["injective"] = decomposition->injective;
    d["homomorphism"] = decomposition->homomorphism;
    d["projections_surjective"] = decomposition->projections_surjective;
    d["factors_irreducible"] = decomposition->factors_irreducible;
    j["decomposition"] = d;
    j["passed"] = decomposition->verified();
  } else {
    j["passed"] = true;
  }
  return j;
}

Json single_spec(const SingleSpecReport& r) {
  Json j = Json::object();
  j["operation"] = "single-spec";
  j["p0"] = r.p0;
  j["p1"] = r.p1;
  j["prime_bound"] = r.bound;
  j["f"] = r.f.str();
  j["rational_root"] = r.rational_root ? Json(r.rational_root->str()) : Json(nullptr);
  j["primes_checked"] = r.primes_checked;
  j["primes_without_root"] = r.primes_without_root;
  j["legendre_checked"] = r.legendre_checked;
  Json d = Json::array();
  for (const auto& x : r.discrepancies) d.push_back(Json{{"prime", x.prime}, {"detail", x.detail}});
  j["discrepancies"] = d;
  Json roots = Json::array();
  for (const auto& [p, x] : r.sample_roots) roots.push_back(Json{{"prime", p}, {"root", x}});
  j["sample_roots"] = roots;
  j["passed"] = r.passed();
  return j;
}

Json presentation(const PresentationReport& r, std::uint64_t trials) {
  Json j = Json::object();
  j["operation"] = "presentation";
  j["meadow"] = r.meadow;
  j["seed"] = r.seed;
  const auto m = make_meadow(r.meadow);
  Json rel = Json::array();
  for (const auto& c : r.relations) {
    Json v = verdict(*m, "", to_string(c.relation), c.verdict);
    v["mode"] = c.mode.name();
    rel.push_back(v);
  }
  j["verdicts"] = rel;
  j["trials"] = trials;
  j["normalized"] = r.normalized;
  j["zero_forms"] = r.zero_forms;
  j["roundtrips"] = r.roundtrips;
  j["failures"] = r.failures;
  j["passed"] = r.passed();
  return j;
}

Json signs(const SignSuiteReport& r, const std::vector<LawReport>& order, const std::optional<TheoryReport>& efr,
           const MeadowPtr& m) {
  Json j = Json::object();
  j["operation"] = "signs";
  j["meadow"] = r.meadow;
  j["theory"] = "Signs";
  j["mode"] = "grid+sample";
  j["seed"] = r.seed;
  j["grid_size"] = r.grid_size;
  Json arr = Json::array();
  for (const auto& v : r.verdicts) arr.push_back(verdict(*m, v.label, to_string(v.equation), v.verdict));
  j["verdicts"] = arr;
  bool ok = r.holds();
  if (!order.empty()) {
    const RationalMeadow q;
    Json o = Json::array();
    for (const auto& l : order) {
      o.push_back(verdict(q, l.label.substr(0, l.label.find(':')), l.label.substr(l.label.find(':') + 2), l.verdict));
      ok = ok && l.verdict.holds();
    }
    j["order_axioms"] = o;
  }
  if (efr) {
    j["efr"] = theory_verdicts(*m, *efr);
    ok = ok && efr->holds();
  }
  j["passed"] = ok;
  return j;
}

Json eq_meadow(const EqMeadowReport& r) {
  const auto m = eq_base_meadow();
  Json j = Json::object();
  j["operation"] = "eq-expansion";
  j["meadow"] = m->descriptor();
  j["mode"] = "exhaustive";
  Json defs = Json::array();
  for (const auto& v : r.defining) defs.push_back(verdict(*m, "", v.label, v.verdict));
  j["verdicts"] = defs;
  j["counterexample"] = verdict(*m, "", r.counterexample.label, r.counterexample.verdict);
  j["displayed"] = Json{{"x", r.displayed_x}, {"lhs", r.displayed_lhs}, {"rhs", r.displayed_rhs}};
  j["expanded_congruences"] = r.expanded_congruences;
  j["reduct_congruences"] = r.reduct_congruences;
  j["expanded_simple"] = r.expanded_simple;
  j["reduct_subdirectly_irreducible"] = r.reduct_subdirectly_irreducible;
  j["inverse_of_displayed"] = r.inverse_of_displayed;
  j["inverse_law"] = verdict(*m, "IL", "x != 0 -> x * x^-1 = 1", r.inverse_law);
  j["passed"] = r.matches_expected();
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace meadow::report
