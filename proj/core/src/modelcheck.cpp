#include "meadow/modelcheck.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace meadow {

// ---------------------------------------------------------------------------
// Evaluation

namespace {

template <class Lookup>
Value eval_impl(const Term& t, const Meadow& m, const Lookup& lookup, const Interpretation& interp) {
  if (auto n = t.numeral_value()) return m.from_integer(BigInt(static_cast<unsigned long>(*n)));
  switch (t.kind()) {
    case TermKind::Zero: return m.zero();
    case TermKind::One: return m.one();
    case TermKind::Var: {
      const Value* v = lookup(t.name());
      if (!v) throw EvalError("unbound variable '" + t.name() + "'");
      return *v;
    }
    case TermKind::Const: {
      if (auto it = interp.constants.find(t.name()); it != interp.constants.end()) return it->second;
      if (const auto* ext = dynamic_cast<const ExtensionMeadow*>(&m); ext && ext->generator_name() == t.name()) {
        return ext->generator();
      }
      throw EvalError("constant '" + t.name() + "' has no interpretation in " + m.descriptor());
    }
    case TermKind::Add: return m.add(eval_impl(t.arg(0), m, lookup, interp), eval_impl(t.arg(1), m, lookup, interp));
    case TermKind::Mul: return m.mul(eval_impl(t.arg(0), m, lookup, interp), eval_impl(t.arg(1), m, lookup, interp));
    case TermKind::Neg: return m.neg(eval_impl(t.arg(0), m, lookup, interp));
    case TermKind::Inv: return m.inv(eval_impl(t.arg(0), m, lookup, interp));
    case TermKind::App: {
      auto it = interp.functions.find(t.name());
      if (it == interp.functions.end()) {
        throw EvalError("function symbol '" + t.name() + "' has no interpretation in " + m.descriptor());
      }
      std::vector<Value> args;
      for (const auto& a : t.args()) args.push_back(eval_impl(a, m, lookup, interp));
      return it->second(args);
    }
  }
  throw std::logic_error("unreachable term kind");
}

}  // namespace

Value eval(const Term& t, const Meadow& m, const std::map<std::string, Value>& env, const Interpretation& interp) {
  return eval_impl(
      t, m,
      [&](const std::string& name) -> const Value* {
        auto it = env.find(name);
        return it == env.end() ? nullptr : &it->second;
      },
      interp);
}

Value eval(const Term& t, const Meadow& m, const Assignment& env, const Interpretation& interp) {
  return eval_impl(
      t, m,
      [&](const std::string& name) -> const Value* {
        for (const auto& [k, v] : env) {
          if (k == name) return &v;
        }
        return nullptr;
      },
      interp);
}

// ---------------------------------------------------------------------------
// Verdicts and modes

std::string CheckMode::name() const {
  switch (kind) {
    case Kind::Exhaustive: return "exhaustive";
    case Kind::Sample: return "sample";
    case Kind::Closed: return "closed";
    case Kind::Grid: return "grid";
  }
  return "?";
}

std::string Verdict::status_name() const {
  switch (status) {
    case Status::HoldsExhaustive: return "holds_exhaustive";
    case Status::HoldsSampled: return "holds_sampled(" + std::to_string(samples) + ")";
    case Status::HoldsGrid: return "holds_grid";
    case Status::Fails: return "fails";
  }
  return "?";
}

bool TheoryReport::holds() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.verdict.holds(); });
}

bool EkReport::all_hold() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.holds; });
}

namespace detail {

std::optional<std::uint64_t> first_failure(std::uint64_t total, unsigned workers,
                                           const std::function<std::function<bool(std::uint64_t)>()>& make) {
  constexpr std::uint64_t kChunk = 2048;
  std::atomic<std::uint64_t> best{total};
  std::atomic<std::uint64_t> next{0};
  auto run = [&] {
    auto failing = make();
    for (;;) {
      const std::uint64_t start = next.fetch_add(kChunk);
      if (start >= total || start >= best.load()) return;
      const std::uint64_t stop = std::min(total, start + kChunk);
      for (std::uint64_t i = start; i < stop; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) return;
        if (failing(i)) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>((total + kChunk - 1) / kChunk)));
  if (n <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    for (unsigned w = 0; w < n; ++w) {
      pool.emplace_back([&] {
        try {
          run();
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
          best.store(0);
        }
      });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }
  const std::uint64_t b = best.load();
  if (b >= total) return std::nullopt;
  return b;
}

}  // namespace detail

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && acc > cap / base) return cap + 1;
    acc *= base;
  }
  return acc;
}

// Mixed-radix decoding with the first variable most significant.
void decode(std::uint64_t index, std::uint64_t radix, std::size_t width, std::vector<std::uint64_t>& digits) {
  digits.resize(width);
  for (std::size_t j = width; j-- > 0;) {
    digits[j] = index % radix;
    index /= radix;
  }
}

/// The sequence of assignments a mode visits.
class Domain {
 public:
  Domain(const Meadow& m, std::size_t vars, const CheckMode& mode) : m_(m), width_(vars), mode_(mode) {
    switch (mode.kind) {
      case CheckMode::Kind::Exhaustive: {
        radix_ = m.size();
        total_ = checked_power(radix_, vars, kExhaustiveCap);
        if (total_ > kExhaustiveCap) {
          throw CapacityError("exhaustive check of " + std::to_string(vars) + " variables over " + m.descriptor() +
                              " exceeds " + std::to_string(kExhaustiveCap) + " assignments; use sampling");
        }
        break;
      }
      case CheckMode::Kind::Grid: {
        if (mode.grid.empty()) throw std::invalid_argument("grid mode needs at least one grid value");
        for (const auto& g : mode.grid) {
          if (!m.contains(g)) throw ForeignValueError(m.descriptor(), "grid value");
        }
        radix_ = mode.grid.size();
        total_ = checked_power(radix_, vars, kExhaustiveCap);
        if (total_ > kExhaustiveCap) throw CapacityError("grid check exceeds " + std::to_string(kExhaustiveCap) + " assignments");
        break;
      }
      case CheckMode::Kind::Closed:
        if (vars != 0) throw std::invalid_argument("closed mode applies only to equations without variables");
        total_ = 1;
        break;
      case CheckMode::Kind::Sample: {
        probes_ = m.probes();
        if (vars == 0) {
          probe_total_ = 1;
        } else {
          const auto combos = checked_power(probes_.size(), vars, kProbeComboCap);
          diagonal_ = combos > kProbeComboCap;
          probe_total_ = diagonal_ ? probes_.size() : combos;
        }
        total_ = probe_total_ + (vars == 0 ? 0 : mode.count);
        break;
      }
    }
  }

  std::uint64_t total() const { return total_; }
  std::uint64_t radix() const { return radix_; }

  void values(std::uint64_t index, std::vector<Value>& out, std::vector<std::uint64_t>& digits) const {
    out.resize(width_);
    switch (mode_.kind) {
      case CheckMode::Kind::Exhaustive:
        decode(index, radix_, width_, digits);
        for (std::size_t j = 0; j < width_; ++j) out[j] = m_.element(digits[j]);
        return;
      case CheckMode::Kind::Grid:
        decode(index, radix_, width_, digits);
        for (std::size_t j = 0; j < width_; ++j) out[j] = mode_.grid[digits[j]];
        return;
      case CheckMode::Kind::Closed: return;
      case CheckMode::Kind::Sample:
        if (index < probe_total_) {
          if (diagonal_) {
            for (std::size_t j = 0; j < width_; ++j) out[j] = probes_[index];
          } else {
            decode(index, probes_.size(), width_, digits);
            for (std::size_t j = 0; j < width_; ++j) out[j] = probes_[digits[j]];
          }
          return;
        }
        SplitMix64 rng(derive_seed(mode_.seed, index - probe_total_));
        for (std::size_t j = 0; j < width_; ++j) out[j] = m_.sample(rng);
        return;
    }
  }

 private:
  const Meadow& m_;
  std::size_t width_;
  const CheckMode& mode_;
  std::uint64_t radix_ = 0;
  std::uint64_t total_ = 0;
  std::vector<Value> probes_;
  bool diagonal_ = false;
  std::uint64_t probe_total_ = 0;
};

Verdict holding_verdict(const CheckMode& mode, std::uint64_t total) {
  Verdict v;
  v.assignments_checked = total;
  switch (mode.kind) {
    case CheckMode::Kind::Exhaustive:
    case CheckMode::Kind::Closed: v.status = Verdict::Status::HoldsExhaustive; break;
    case CheckMode::Kind::Grid: v.status = Verdict::Status::HoldsGrid; break;
    case CheckMode::Kind::Sample:
      v.status = Verdict::Status::HoldsSampled;
      v.samples = mode.count;
      break;
  }
  return v;
}

Verdict failing_verdict(const Law& law, const std::vector<Value>& values, std::pair<Value, Value> sides,
                        std::uint64_t index) {
  Verdict v;
  v.status = Verdict::Status::Fails;
  v.assignments_checked = index + 1;
  Witness w;
  for (std::size_t j = 0; j < law.vars.size(); ++j) w.assignment.emplace_back(law.vars[j], values[j]);
  w.lhs = std::move(sides.first);
  w.rhs = std::move(sides.second);
  v.witness = std::move(w);
  return v;
}

// Index-level program for fast exhaustive evaluation over a finite carrier.
class Program {
 public:
  Program(const Term& t, const Meadow& m, const std::vector<std::string>& vars, const Interpretation& interp)
      : m_(m), interp_(interp) {
    root_ = compile(t, vars);
  }

  std::uint64_t run(const std::vector<std::uint64_t>& slots, std::vector<std::uint64_t>& regs) const {
    regs.resize(code_.size());
    std::vector<Value> args;
    for (std::size_t i = 0; i < code_.size(); ++i) {
      const Instr& in = code_[i];
      switch (in.op) {
        case Op::Lit: regs[i] = in.a; break;
        case Op::Var: regs[i] = slots[in.a]; break;
        case Op::Add: regs[i] = m_.add_index(regs[in.a], regs[in.b]); break;
        case Op::Mul: regs[i] = m_.mul_index(regs[in.a], regs[in.b]); break;
        case Op::Neg: regs[i] = m_.neg_index(regs[in.a]); break;
        case Op::Inv: regs[i] = m_.inv_index(regs[in.a]); break;
        case Op::App:
          args.clear();
          for (auto r : in.args) args.push_back(m_.element(regs[r]));
          regs[i] = m_.index_of((*in.fn)(args));
          break;
      }
    }
    return regs[root_];
  }

 private:
  enum class Op { Lit, Var, Add, Neg, Mul, Inv, App };
  struct Instr {
    Instr(Op o, std::uint64_t x = 0, std::uint64_t y = 0) : op(o), a(x), b(y) {}
    Op op;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    const OpFn* fn = nullptr;
    std::vector<std::uint64_t> args;
  };

  std::uint64_t emit(Instr in) {
    code_.push_back(std::move(in));
    return code_.size() - 1;
  }

  std::uint64_t compile(const Term& t, const std::vector<std::string>& vars) {
    if (auto n = t.numeral_value()) {
      return emit({Op::Lit, m_.index_of(m_.from_integer(BigInt(static_cast<unsigned long>(*n))))});
    }
    switch (t.kind()) {
      case TermKind::Zero: return emit({Op::Lit, m_.zero_index()});
      case TermKind::One: return emit({Op::Lit, m_.one_index()});
      case TermKind::Var: {
        auto it = std::find(vars.begin(), vars.end(), t.name());
        if (it == vars.end()) throw EvalError("unbound variable '" + t.name() + "'");
        return emit({Op::Var, static_cast<std::uint64_t>(it - vars.begin())});
      }
      case TermKind::Const: return emit({Op::Lit, m_.index_of(eval(t, m_, Assignment{}, interp_))});
      case TermKind::Add: {
        auto a = compile(t.arg(0), vars);
        auto b = compile(t.arg(1), vars);
        return emit({Op::Add, a, b});
      }
      case TermKind::Mul: {
        auto a = compile(t.arg(0), vars);
        auto b = compile(t.arg(1), vars);
        return emit({Op::Mul, a, b});
      }
      case TermKind::Neg: return emit({Op::Neg, compile(t.arg(0), vars)});
      case TermKind::Inv: return emit({Op::Inv, compile(t.arg(0), vars)});
      case TermKind::App: {
        auto it = interp_.functions.find(t.name());
        if (it == interp_.functions.end()) {
          throw EvalError("function symbol '" + t.name() + "' has no interpretation in " + m_.descriptor());
        }
        Instr in(Op::App);
        in.fn = &it->second;
        for (const auto& a : t.args()) in.args.push_back(compile(a, vars));
        return emit(std::move(in));
      }
    }
    throw std::logic_error("unreachable term kind");
  }

  const Meadow& m_;
  const Interpretation& interp_;
  std::vector<Instr> code_;
  std::uint64_t root_ = 0;
};

std::vector<std::string> sorted_vars(const Equation& e) {
  const auto fv = free_vars(e);
  return {fv.begin(), fv.end()};
}

}  // namespace

Verdict check_law(const Meadow& m, const Law& law, const CheckOptions& opt) {
  const Domain domain(m, law.vars.size(), opt.mode);
  const auto hit = detail::first_failure(domain.total(), opt.workers, [&] {
    return [&, values = std::vector<Value>(), digits = std::vector<std::uint64_t>()](std::uint64_t i) mutable {
      domain.values(i, values, digits);
      return law.violation(values).has_value();
    };
  });
  if (!hit) return holding_verdict(opt.mode, domain.total());
  std::vector<Value> values;
  std::vector<std::uint64_t> digits;
  domain.values(*hit, values, digits);
  return failing_verdict(law, values, *law.violation(values), *hit);
}

Law equation_law(const Meadow& m, const Equation& e, const Interpretation& interp, std::string label) {
  Law law;
  law.label = label.empty() ? to_string(e) : std::move(label);
  law.vars = sorted_vars(e);
  law.violation = [&m, e, interp, vars = law.vars](const std::vector<Value>& values)
      -> std::optional<std::pair<Value, Value>> {
    Assignment env;
    for (std::size_t j = 0; j < vars.size(); ++j) env.emplace_back(vars[j], values[j]);
    Value l = eval(e.lhs, m, env, interp);
    Value r = eval(e.rhs, m, env, interp);
    if (l == r) return std::nullopt;
    return std::make_pair(std::move(l), std::move(r));
  };
  return law;
}

Verdict check_equation(const Meadow& m, const Equation& e, const CheckOptions& opt) {
  const Law law = equation_law(m, e, opt.interp);
  if (opt.mode.kind != CheckMode::Kind::Exhaustive || !m.is_finite()) return check_law(m, law, opt);

  const Domain domain(m, law.vars.size(), opt.mode);
  const Program lhs(e.lhs, m, law.vars, opt.interp);
  const Program rhs(e.rhs, m, law.vars, opt.interp);
  const std::uint64_t radix = domain.radix();
  const std::size_t width = law.vars.size();
  const auto hit = detail::first_failure(domain.total(), opt.workers, [&] {
    return [&, digits = std::vector<std::uint64_t>(), regs = std::vector<std::uint64_t>()](std::uint64_t i) mutable {
      decode(i, radix, width, digits);
      return lhs.run(digits, regs) != rhs.run(digits, regs);
    };
  });
  if (!hit) return holding_verdict(opt.mode, domain.total());
  // The witness is re-derived with the structural evaluator.
  std::vector<Value> values;
  std::vector<std::uint64_t> digits;
  domain.values(*hit, values, digits);
  auto sides = law.violation(values);
  if (!sides) throw std::logic_error("compiled and structural evaluation disagree on " + to_string(e));
  return failing_verdict(law, values, std::move(*sides), *hit);
}

Law inverse_law(const Meadow& m) {
  Law law;
  law.label = "x != 0 -> x * x^-1 = 1";
  law.vars = {"x"};
  law.violation = [&m](const std::vector<Value>& v) -> std::optional<std::pair<Value, Value>> {
    const Value& x = v[0];
    if (x == m.zero()) return std::nullopt;
    Value lhs = m.mul(x, m.inv(x));
    if (lhs == m.one()) return std::nullopt;
    return std::make_pair(std::move(lhs), m.one());
  };
  return law;
}

Verdict check_IL(const Meadow& m, const CheckOptions& opt) { return check_law(m, inverse_law(m), opt); }

TheoryReport check_theory(const Meadow& m, const Theory& theory, const CheckOptions& opt) {
  TheoryReport report{theory.name, {}};
  for (const auto& ne : theory.equations) {
    report.verdicts.push_back({ne.label, ne.equation, check_equation(m, ne.equation, opt)});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Combining equations

Equation combine_pair(const Term& r, const Term& t) { return {Term::mul(zero_of(t), zero_of(r)), Term::one()}; }

Term normalize_to_zero(const Equation& e) {
  if (e.rhs.kind() == TermKind::Zero) return e.lhs;
  return sub(e.lhs, e.rhs);
}

Equation reduce_to_single(const std::vector<Equation>& eqs) {
  if (eqs.empty()) throw std::invalid_argument("cannot combine an empty list of equations");
  if (eqs.size() == 1) return eqs.front();
  Equation combined = combine_pair(normalize_to_zero(eqs[0]), normalize_to_zero(eqs[1]));
  for (std::size_t i = 2; i < eqs.size(); ++i) combined = combine_pair(normalize_to_zero(combined), normalize_to_zero(eqs[i]));
  return combined;
}

Law equivalence_law(const Meadow& m, const std::vector<Equation>& eqs, const Equation& combined,
                    const Interpretation& interp) {
  std::set<std::string> names = free_vars(combined);
  for (const auto& e : eqs) {
    const auto fv = free_vars(e);
    names.insert(fv.begin(), fv.end());
  }
  Law law;
  law.label = "conjunction <-> " + to_string(combined);
  law.vars.assign(names.begin(), names.end());
  law.violation = [&m, eqs, combined, interp, vars = law.vars](const std::vector<Value>& values)
      -> std::optional<std::pair<Value, Value>> {
    Assignment env;
    for (std::size_t j = 0; j < vars.size(); ++j) env.emplace_back(vars[j], values[j]);
    bool all = true;
    for (const auto& e : eqs) all = all && eval(e.lhs, m, env, interp) == eval(e.rhs, m, env, interp);
    Value l = eval(combined.lhs, m, env, interp);
    Value r = eval(combined.rhs, m, env, interp);
    if (all == (l == r)) return std::nullopt;
    return std::make_pair(std::move(l), std::move(r));
  };
  return law;
}

// ---------------------------------------------------------------------------
// Prime-field procedures

InitialSpecReport initial_spec_check(const std::vector<Equation>& eqs, std::uint64_t prime_bound, unsigned workers) {
  InitialSpecReport report;
  report.bound = prime_bound;
  CheckOptions opt{CheckMode::exhaustive(), workers, {}};
  for (auto p : primes_up_to(prime_bound)) {
    const ModularMeadow m(p, true);
    PrimeModelCheck pc;
    pc.prime = p;
    pc.model = true;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      Verdict v = check_equation(m, eqs[i], opt);
      if (!v.holds()) {
        pc.model = false;
        pc.failing_equation = i;
        pc.witness = std::move(v.witness);
        break;
      }
    }
    if (pc.model && !report.refuting_prime) report.refuting_prime = p;
    report.primes.push_back(std::move(pc));
  }
  return report;
}

namespace {
Equation unit_equation(std::uint64_t q) { return {one_of(numeral(q)), Term::one()}; }
}  // namespace

SeparatingPrimeReport separating_prime(const std::set<std::uint64_t>& excluded, std::uint64_t bound) {
  SeparatingPrimeReport report;
  report.excluded = excluded;
  report.bound = bound;
  for (auto p : primes_up_to(bound)) {
    if (excluded.count(p)) continue;
    const ModularMeadow m(p, true);
    CheckOptions opt{CheckMode::closed(), 1, {}};
    std::vector<LabeledVerdict> checks;
    bool ok = true;
    for (auto q : excluded) {
      Equation e = unit_equation(q);
      Verdict v = check_equation(m, e, opt);
      ok = ok && v.holds();
      checks.push_back({"q=" + std::to_string(q), e, std::move(v)});
    }
    Equation own = unit_equation(p);
    Verdict v = check_equation(m, own, opt);
    ok = ok && !v.holds();
    checks.push_back({"p=" + std::to_string(p), own, std::move(v)});
    if (ok) {
      report.prime = p;
      report.checks = std::move(checks);
      return report;
    }
  }
  return report;
}

EkReport check_Ek(std::uint64_t k, std::uint64_t p, unsigned workers) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("E_k diagnostic needs an odd prime p, got " + std::to_string(p));
  if (p <= k) throw std::invalid_argument("E_k diagnostic needs p > k");
  EkReport report;
  report.k = k;
  report.p = p;
  report.modulus = 2 * p;
  const ModularMeadow m(2 * p, false);
  const Value a = Residue(2 * p, p);
  Interpretation interp;
  interp.constants["a"] = a;
  const std::string ring = "Z/" + std::to_string(2 * p) + "Z";
  auto value_of = [&](const Term& t) { return eval(t, m, Assignment{}, interp); };
  auto show = [&](const Value& v) { return m.format(v); };

  {
    const Value av = value_of(Term::constant("a"));
    report.clauses.push_back({"a != 0", av != m.zero(), "a = " + show(av) + " in " + ring});
  }
  for (std::uint64_t n = 1; n < k; ++n) {
    const Term nn = numeral(n);
    const Value v = value_of(nn);
    report.clauses.push_back({std::to_string(n) + " != 0", v != m.zero(), std::to_string(n) + " = " + show(v) + " in " + ring});
  }
  for (std::uint64_t n = 1; n < k; ++n) {
    const Term nn = numeral(n);
    const Value inv = value_of(Term::inv(nn));
    const Value prod = value_of(one_of(nn));
    const std::string ns = std::to_string(n);
    report.clauses.push_back({ns + " * " + ns + "^-1 = 1", prod == m.one(),
                              ns + "^-1 = " + show(inv) + ", " + ns + " * " + ns + "^-1 = " + show(prod) + " in " + ring});
  }
  {
    const Value v = value_of(Term::mul(numeral(2), Term::constant("a")));
    report.clauses.push_back({"2 * a = 0", v == m.zero(), "2 * a = " + show(v) + " in " + ring});
  }
  {
    const TheoryReport md = check_theory(m, theories::md(), {CheckMode::exhaustive(), workers, {}});
    std::string detail = md.holds() ? "all 10 axioms hold exhaustively" : "";
    for (const auto& v : md.verdicts) {
      if (!v.verdict.holds()) detail += (detail.empty() ? "fails: " : ", ") + v.label;
    }
    report.clauses.push_back({"Md", md.holds(), detail});
  }
  return report;
}

InitialEqualityReport bounded_initial_equality(const Term& s, const Term& t, std::uint64_t prime_bound) {
  if (!s.is_closed() || !t.is_closed()) throw std::invalid_argument("initial equality needs closed terms");
  InitialEqualityReport report;
  report.bound = prime_bound;
  std::vector<MeadowPtr> fleet{std::make_shared<RationalMeadow>()};
  for (auto p : primes_up_to(prime_bound)) fleet.push_back(std::make_shared<ModularMeadow>(p, true));
  for (const auto& m : fleet) {
    ++report.meadows_checked;
    const Value l = eval(s, *m, Assignment{});
    const Value r = eval(t, *m, Assignment{});
    if (l != r) {
      report.distinct = true;
      report.witness_meadow = m->descriptor();
      report.lhs_value = m->format(l);
      report.rhs_value = m->format(r);
      return report;
    }
  }
  return report;
}

}  // namespace meadow
