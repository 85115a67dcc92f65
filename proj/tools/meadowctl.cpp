#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "meadow/congruence.hpp"
#include "meadow/meadows.hpp"
#include "meadow/modelcheck.hpp"
#include "meadow/numberfield.hpp"
#include "meadow/numeric.hpp"
#include "meadow/report.hpp"
#include "meadow/signexp.hpp"
#include "meadow/term.hpp"

namespace {

using meadow::report::Json;
using namespace meadow;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
  bool json = false;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 0;
};

// Splits on commas outside <>, [] and ().
std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '<' || ch == '[' || ch == '(') ++depth;
    if (ch == '>' || ch == ']' || ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  for (const auto& s : out) {
    if (s.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
  }
  return out;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& s : split_top_level(text)) out.push_back(parse_u64(s));
  return out;
}

Signature signature_for(const Meadow& m) {
  if (const auto* e = dynamic_cast<const ExtensionMeadow*>(&m)) {
    return Signature::standard().with_constants({e->generator_name()});
  }
  return Signature::standard();
}

// eq everywhere, s on ordered meadows.
Interpretation interpretation_for(const MeadowPtr& m) {
  Interpretation interp = eq_interpretation(m);
  if (is_ordered(*m)) interp.functions["s"] = sign_interpretation(m).functions.at("s");
  return interp;
}

std::vector<Value> parse_values(const Meadow& m, const std::string& csv) {
  std::vector<Value> out;
  for (const auto& s : split_top_level(csv)) out.push_back(m.parse_value(s));
  return out;
}

bool fits_exhaustive(const Meadow& m, std::size_t vars) {
  if (!m.is_finite()) return false;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    if (count > kExhaustiveCap / m.size()) return false;
    count *= m.size();
  }
  return true;
}

struct ModeFlags {
  std::string mode = "auto";
  std::uint64_t samples = 1000;
  std::string grid;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--mode", mode, "exhaustive, sample, closed, grid or auto")
        ->check(CLI::IsMember({"auto", "exhaustive", "sample", "closed", "grid"}));
    cmd->add_option("--samples", samples, "random assignments in sample mode")->capture_default_str();
    cmd->add_option("--grid", grid, "comma-separated values for grid mode");
  }

  CheckMode resolve(const Meadow& m, std::size_t max_vars, std::uint64_t seed) const {
    if (mode == "exhaustive") return CheckMode::exhaustive();
    if (mode == "sample") return CheckMode::sample(samples, seed);
    if (mode == "closed") return CheckMode::closed();
    if (mode == "grid" || !grid.empty()) {
      if (grid.empty()) throw std::invalid_argument("--mode grid needs --grid");
      return CheckMode::over_grid(parse_values(m, grid));
    }
    if (max_vars == 0) return CheckMode::closed();
    return fits_exhaustive(m, max_vars) ? CheckMode::exhaustive() : CheckMode::sample(samples, seed);
  }
};

std::vector<Equation> gather_equations(const std::vector<std::string>& texts, const std::string& file) {
  std::vector<Equation> eqs;
  if (!file.empty()) eqs = load_equation_file(file).equations;
  for (const auto& t : texts) eqs.push_back(parse_equation(t));
  if (eqs.empty()) throw std::invalid_argument("no equations given");
  return eqs;
}

// ---------------------------------------------------------------------------
// Text rendering of reports

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string verdict_line(const Json& v) {
  std::string line;
  if (v.contains("label")) line += v["label"].get<std::string>() + ": ";
  line += v.value("equation", std::string()) + "  " + v["status"].get<std::string>();
  if (v.contains("witness")) {
    const Json& w = v["witness"];
    line += "  witness";
    for (const auto& [k, x] : w["assignment"].items()) line += " " + k + "=" + scalar_text(x);
    line += "  lhs=" + scalar_text(w["lhs"]) + " rhs=" + scalar_text(w["rhs"]);
  }
  return line;
}

void render_text(std::ostream& out, const Json& j, const std::string& indent) {
  for (const auto& [key, val] : j.items()) {
    if (val.is_object() && val.contains("status")) {
      out << indent << key << ": " << verdict_line(val) << "\n";
    } else if (val.is_object()) {
      out << indent << key << ":\n";
      render_text(out, val, indent + "  ");
    } else if (val.is_array() && !val.empty() && (val.front().is_object() || val.front().is_array())) {
      out << indent << key << ":\n";
      for (const auto& item : val) {
        if (item.is_object() && item.contains("status")) {
          out << indent << "  " << verdict_line(item) << "\n";
        } else if (item.is_object()) {
          std::string line;
          for (const auto& [k, x] : item.items()) line += (line.empty() ? "" : "  ") + k + "=" + scalar_text(x);
          out << indent << "  " << line << "\n";
        } else {
          out << indent << "  " << item.dump() << "\n";
        }
      }
    } else {
      out << indent << key << ": " << scalar_text(val) << "\n";
    }
  }
}

int emit(const Globals& g, const Json& j) {
  if (g.json) {
    std::cout << report::dump(j);
  } else {
    render_text(std::cout, j, "");
  }
  return j.value("passed", false) ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// Subcommands

int run_eval(const Globals& g, const std::string& desc, const std::string& text, const std::vector<std::string>& assigns) {
  const MeadowPtr m = make_meadow(desc);
  const Term t = parse_term(text, signature_for(*m));
  std::map<std::string, Value> env;
  Json assignment = Json::object();
  for (const auto& a : assigns) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("assignment '" + a + "' is not name=value");
    const Value v = m->parse_value(a.substr(eq + 1));
    env[a.substr(0, eq)] = v;
  }
  for (const auto& [k, v] : env) assignment[k] = m->format(v);
  const Value v = eval(t, *m, env, interpretation_for(m));
  Json j = Json::object();
  j["operation"] = "eval";
  j["meadow"] = m->descriptor();
  j["term"] = to_string(t);
  j["assignment"] = assignment;
  j["value"] = m->format(v);
  j["passed"] = true;
  if (g.json) {
    std::cout << report::dump(j);
  } else {
    std::cout << m->format(v) << "\n";
  }
  return kExitPass;
}

int run_check(const Globals& g, const std::string& desc, const std::string& text, bool il, const ModeFlags& mf) {
  const MeadowPtr m = make_meadow(desc);
  if (il == !text.empty()) throw std::invalid_argument("check needs exactly one of an equation or --il");
  if (il) {
    const CheckMode mode = mf.resolve(*m, 1, g.seed);
    return emit(g, report::inverse_law(*m, mode, check_IL(*m, {mode, g.workers, {}})));
  }
  const Equation e = parse_equation(text, signature_for(*m));
  const CheckMode mode = mf.resolve(*m, free_vars(e).size(), g.seed);
  return emit(g, report::check(*m, e, mode, check_equation(*m, e, {mode, g.workers, interpretation_for(m)})));
}

int run_axioms(const Globals& g, const std::string& desc, const std::string& suite, const ModeFlags& mf) {
  const MeadowPtr m = make_meadow(desc);
  if (suite == "il") {
    const CheckMode mode = mf.resolve(*m, 1, g.seed);
    Json j = report::inverse_law(*m, mode, check_IL(*m, {mode, g.workers, {}}));
    j["operation"] = "axioms";
    return emit(g, j);
  }
  std::optional<Theory> th = theories::by_name(suite);
  if (!th) {
    if (!std::filesystem::exists(suite)) throw std::invalid_argument("unknown suite or missing file '" + suite + "'");
    const auto file = load_equation_file(suite, signature_for(*m));
    th = Theory{};
    th->name = std::filesystem::path(suite).filename().string();
    for (std::size_t i = 0; i < file.equations.size(); ++i) {
      th->equations.push_back({"(" + std::to_string(i + 1) + ")", file.equations[i]});
    }
  }
  if (suite == "sr") {
    // No meadow here interprets sqrt; the suite is listed, not checked.
    Json j = Json::object();
    j["operation"] = "axioms";
    j["meadow"] = m->descriptor();
    j["theory"] = th->name;
    j["mode"] = "display";
    Json arr = Json::array();
    for (const auto& ne : th->equations) arr.push_back(Json{{"label", ne.label}, {"equation", to_string(ne.equation)}});
    j["equations"] = arr;
    const auto root = sqrt2_rational_root();
    j["sqrt2_rational_root"] = root ? Json(root->str()) : Json(nullptr);
    j["passed"] = !root.has_value();
    return emit(g, j);
  }
  std::size_t max_vars = 0;
  for (const auto& ne : th->equations) max_vars = std::max(max_vars, free_vars(ne.equation).size());

  if (suite.rfind("efr:", 0) == 0 && mf.mode == "auto" && mf.grid.empty()) {
    const TheoryReport r = check_efr(m, parse_u64(suite.substr(4)), g.workers);
    const CheckMode shown = m->is_finite() ? CheckMode::exhaustive() : CheckMode::over_grid({});
    return emit(g, report::theory("axioms", *m, r, shown));
  }
  CheckMode mode = mf.resolve(*m, max_vars, g.seed);
  Interpretation interp = interpretation_for(m);
  if (suite == "signs") {
    interp = sign_interpretation(m);
    if (mf.mode == "auto" && mf.grid.empty() && !m->is_finite()) mode = CheckMode::over_grid(default_sign_grid(*m));
  }
  return emit(g, report::theory("axioms", *m, check_theory(*m, *th, {mode, g.workers, interp}), mode));
}

int run_congruences(const Globals& g, std::string desc, bool eq_expansion, bool decompose, const std::string& principal) {
  if (desc.empty()) desc = eq_expansion ? eq_base_meadow()->descriptor() : "";
  if (desc.empty()) throw std::invalid_argument("congruences needs --meadow");
  const MeadowPtr m = make_meadow(desc);
  if (!m->is_finite()) throw std::invalid_argument(desc + " is infinite");
  const Interpretation interp = eq_expansion ? eq_interpretation(m) : Interpretation{};
  const FiniteAlgebra alg = FiniteAlgebra::from_meadow(*m, interp);
  const auto lattice = all_congruences(alg, g.workers);
  const bool simple = is_simple(alg, g.workers);
  const auto si = subdirectly_irreducible(alg, g.workers);
  std::optional<SubdirectDecomposition> dec;
  if (decompose) dec = subdirect_decompose(alg, g.workers);
  std::optional<std::pair<std::string, Congruence>> pc;
  if (!principal.empty()) {
    const auto vals = parse_values(*m, principal);
    if (vals.size() != 2) throw std::invalid_argument("--principal takes two elements a,b");
    const auto a = static_cast<std::uint32_t>(m->index_of(vals[0]));
    const auto b = static_cast<std::uint32_t>(m->index_of(vals[1]));
    pc = std::make_pair(m->format(vals[0]) + "," + m->format(vals[1]), principal_congruence(alg, a, b));
  }
  const std::string sig = eq_expansion ? "meadow+eq" : "meadow";
  return emit(g, report::congruences(*m, alg, sig, lattice, simple, si, dec, pc));
}

int run_combine(const Globals& g, const std::vector<std::string>& texts, const std::string& file, const std::string& desc) {
  const auto eqs = gather_equations(texts, file);
  const Equation combined = reduce_to_single(eqs);
  std::optional<std::pair<const Meadow*, Verdict>> equiv;
  MeadowPtr m;
  if (!desc.empty()) {
    m = make_meadow(desc);
    if (!m->is_finite()) throw std::invalid_argument("equivalence checks need a finite meadow");
    const Law law = equivalence_law(*m, eqs, combined);
    equiv = std::make_pair(m.get(), check_law(*m, law, {CheckMode::exhaustive(), g.workers, {}}));
  }
  return emit(g, report::combine(eqs, combined, equiv));
}

int run_initial(const Globals& g, const std::vector<std::string>& texts, const std::string& file, std::uint64_t bound,
                const std::string& lhs, const std::string& rhs) {
  if (!lhs.empty() || !rhs.empty()) {
    if (lhs.empty() || rhs.empty()) throw std::invalid_argument("--lhs and --rhs go together");
    const Term s = parse_term(lhs);
    const Term t = parse_term(rhs);
    return emit(g, report::initial_equality(s, t, bounded_initial_equality(s, t, bound)));
  }
  const auto eqs = gather_equations(texts, file);
  return emit(g, report::initial_spec(eqs, initial_spec_check(eqs, bound, g.workers)));
}

int run_signs(const Globals& g, const std::string& desc, const std::string& grid, std::uint64_t samples,
              std::uint64_t efr_n, bool eq_meadow) {
  if (eq_meadow) return emit(g, report::eq_meadow(eq_meadow_checks(g.workers)));
  const MeadowPtr m = make_meadow(desc);
  const auto values = grid.empty() ? default_sign_grid(*m) : parse_sign_grid(*m, grid);
  const auto suite = check_signs(m, values, samples, g.seed, g.workers);
  std::vector<LawReport> order;
  if (dynamic_cast<const RationalMeadow*>(m.get())) {
    std::vector<Rational> base;
    if (grid.empty()) {
      base = default_order_grid();
    } else {
      for (const auto& v : values) base.push_back(v.rational());
    }
    order = check_order_axioms(base, g.workers);
  }
  return emit(g, report::signs(suite, order, check_efr(m, efr_n, g.workers), m));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation and model checking in meadows"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "print the report as JSON");
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", g.seed, "seed for sampled checks")->capture_default_str();

  std::string meadow_desc = "q0";
  std::string text;
  ModeFlags mf;
  int code = kExitUsage;
  std::function<int()> action;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a term");
  std::vector<std::string> assigns;
  eval_cmd->add_option("--meadow", meadow_desc, "meadow descriptor")->capture_default_str();
  eval_cmd->add_option("term", text, "term")->required();
  eval_cmd->add_option("--assign", assigns, "variable binding name=value");
  eval_cmd->callback([&] { action = [&] { return run_eval(g, meadow_desc, text, assigns); }; });

  auto* check_cmd = app.add_subcommand("check", "check an equation or the inverse law");
  bool il = false;
  check_cmd->add_option("--meadow", meadow_desc, "meadow descriptor")->capture_default_str();
  check_cmd->add_option("equation", text, "equation s = t");
  check_cmd->add_flag("--il", il, "check x != 0 -> x * x^-1 = 1");
  mf.add_to(check_cmd);
  check_cmd->callback([&] { action = [&] { return run_check(g, meadow_desc, text, il, mf); }; });

  auto* axioms_cmd = app.add_subcommand("axioms", "check an axiom suite");
  std::string suite;
  axioms_cmd->add_option("--meadow", meadow_desc, "meadow descriptor")->capture_default_str();
  axioms_cmd->add_option("--suite", suite, "md, il, inv:<B>, signs, efr:<N>, sr or an equation file")->required();
  mf.add_to(axioms_cmd);
  axioms_cmd->callback([&] { action = [&] { return run_axioms(g, meadow_desc, suite, mf); }; });

  auto* cong_cmd = app.add_subcommand("congruences", "congruence lattice of a finite meadow");
  std::string cong_meadow;
  bool eq_expansion = false;
  bool decompose = false;
  std::string principal;
  cong_cmd->add_option("--meadow", cong_meadow, "finite meadow descriptor");
  cong_cmd->add_flag("--eq-expansion", eq_expansion, "add the eq operation");
  cong_cmd->add_flag("--decompose", decompose, "subdirect decomposition");
  cong_cmd->add_option("--principal", principal, "principal congruence of a,b");
  cong_cmd->callback([&] { action = [&] { return run_congruences(g, cong_meadow, eq_expansion, decompose, principal); }; });

  auto* single_cmd = app.add_subcommand("single-spec", "quadratic-residue single equation check");
  std::uint64_t p0 = 2, p1 = 3, bound = 10000;
  single_cmd->add_option("--p0", p0)->capture_default_str();
  single_cmd->add_option("--p1", p1)->capture_default_str();
  single_cmd->add_option("--bound", bound, "largest prime checked")->capture_default_str();
  single_cmd->callback([&] {
    action = [&] { return emit(g, report::single_spec(verify_single_spec(p0, p1, bound, g.workers))); };
  });

  auto* pres_cmd = app.add_subcommand("presentation", "verify a finite presentation");
  std::string pres_file, minpoly_text;
  std::uint64_t trials = 1000;
  pres_cmd->add_option("--file", pres_file, "presentation file")->required()->check(CLI::ExistingFile);
  pres_cmd->add_option("--minpoly", minpoly_text, "minimal polynomial in x");
  pres_cmd->add_option("--trials", trials, "random closed terms")->capture_default_str();
  pres_cmd->callback([&] {
    action = [&] {
      const Presentation pres = load_presentation(pres_file);
      std::optional<Poly> g_poly;
      if (!minpoly_text.empty()) {
        g_poly = parse_poly(minpoly_text);
      } else {
        g_poly = minpoly_from_relations(pres);
      }
      return emit(g, report::presentation(verify_presentation(pres, g_poly, trials, g.seed, g.workers), trials));
    };
  });

  auto* combine_cmd = app.add_subcommand("combine", "fold equations into one");
  std::vector<std::string> eq_texts;
  std::string eq_file, combine_meadow;
  combine_cmd->add_option("equations", eq_texts, "equations");
  combine_cmd->add_option("--file", eq_file, "equation file")->check(CLI::ExistingFile);
  combine_cmd->add_option("--meadow", combine_meadow, "finite meadow for the equivalence check");
  combine_cmd->callback([&] { action = [&] { return run_combine(g, eq_texts, eq_file, combine_meadow); }; });

  auto* initial_cmd = app.add_subcommand("initial", "bounded initial-specification criterion");
  std::uint64_t initial_bound = 100;
  std::string lhs, rhs;
  initial_cmd->add_option("equations", eq_texts, "equations");
  initial_cmd->add_option("--file", eq_file, "equation file")->check(CLI::ExistingFile);
  initial_cmd->add_option("--bound", initial_bound, "largest prime checked")->capture_default_str();
  initial_cmd->add_option("--lhs", lhs, "closed term s for an s = t comparison");
  initial_cmd->add_option("--rhs", rhs, "closed term t for an s = t comparison");
  initial_cmd->callback([&] { action = [&] { return run_initial(g, eq_texts, eq_file, initial_bound, lhs, rhs); }; });

  auto* sep_cmd = app.add_subcommand("sep-prime", "least separating prime");
  std::string excluded = "2,3,5";
  std::uint64_t sep_bound = 100;
  sep_cmd->add_option("--primes", excluded, "comma-separated primes R")->capture_default_str();
  sep_cmd->add_option("--bound", sep_bound, "search bound")->capture_default_str();
  sep_cmd->callback([&] {
    action = [&] {
      const auto list = parse_u64_list(excluded);
      return emit(g, report::separating_prime(separating_prime({list.begin(), list.end()}, sep_bound)));
    };
  });

  auto* ek_cmd = app.add_subcommand("ek-check", "evaluate E_k in Z/2pZ");
  std::uint64_t k = 3, p = 5;
  ek_cmd->add_option("--k", k)->capture_default_str();
  ek_cmd->add_option("--p", p, "odd prime above k")->capture_default_str();
  ek_cmd->callback([&] { action = [&] { return emit(g, report::ek(check_Ek(k, p, g.workers))); }; });

  auto* signs_cmd = app.add_subcommand("signs", "sign axioms, order axioms and formal realness");
  std::string sign_grid;
  std::uint64_t sign_samples = kSignSamples, efr_n = 5;
  bool eq_meadow = false;
  signs_cmd->add_option("--meadow", meadow_desc, "q0 or a product of q0")->capture_default_str();
  signs_cmd->add_option("--grid", sign_grid, "comma-separated rationals");
  signs_cmd->add_option("--samples", sign_samples, "seeded samples per axiom")->capture_default_str();
  signs_cmd->add_option("--efr", efr_n, "largest EFR instance")->capture_default_str();
  signs_cmd->add_flag("--eq-meadow", eq_meadow, "run the eq-expansion example instead");
  signs_cmd->callback([&] { action = [&] { return run_signs(g, meadow_desc, sign_grid, sign_samples, efr_n, eq_meadow); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    if (e.get_exit_code() != 0) std::cerr << app.help();
    return kExitUsage;
  }

  try {
    code = action();
  } catch (const NotSquarefreeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return code;
}
