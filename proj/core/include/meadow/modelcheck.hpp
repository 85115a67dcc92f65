#ifndef MEADOW_MODELCHECK_HPP
#define MEADOW_MODELCHECK_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "meadow/meadows.hpp"
#include "meadow/term.hpp"

namespace meadow {

using OpFn = std::function<Value(const std::vector<Value>&)>;

/// Meaning of the extra symbols of a signature in one meadow.
struct Interpretation {
  std::map<std::string, Value> constants;
  std::map<std::string, OpFn> functions;
};

/// Unbound variable, unknown constant or uninterpreted function symbol.
class EvalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Variables in ascending name order paired with their values.
using Assignment = std::vector<std::pair<std::string, Value>>;

/// Structural evaluation. Numerals evaluate to the image of n. A constant
/// named like the generator of an extension meadow denotes that generator
/// unless the interpretation binds it.
Value eval(const Term& t, const Meadow& m, const std::map<std::string, Value>& env,
           const Interpretation& interp = {});
Value eval(const Term& t, const Meadow& m, const Assignment& env, const Interpretation& interp = {});

/// Largest number of assignments an exhaustive check will enumerate.
inline constexpr std::uint64_t kExhaustiveCap = 10'000'000;
/// Probe combinations tried in full before falling back to the diagonal.
inline constexpr std::uint64_t kProbeComboCap = 20'000;

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct CheckMode {
  enum class Kind { Exhaustive, Sample, Closed, Grid };
  Kind kind = Kind::Exhaustive;
  std::uint64_t count = 0;  // Sample
  std::uint64_t seed = 0;   // Sample
  std::vector<Value> grid;  // Grid: per-variable value set

  static CheckMode exhaustive() { return {}; }
  static CheckMode sample(std::uint64_t count, std::uint64_t seed) { return {Kind::Sample, count, seed, {}}; }
  static CheckMode closed() { return {Kind::Closed, 0, 0, {}}; }
  static CheckMode over_grid(std::vector<Value> values) { return {Kind::Grid, 0, 0, std::move(values)}; }
  std::string name() const;
};

struct CheckOptions {
  CheckMode mode;
  unsigned workers = 1;
  Interpretation interp;
};

struct Witness {
  Assignment assignment;
  Value lhs;
  Value rhs;
};

struct Verdict {
  enum class Status { HoldsExhaustive, HoldsSampled, HoldsGrid, Fails };
  Status status = Status::HoldsExhaustive;
  std::uint64_t samples = 0;  // HoldsSampled: number of random assignments
  std::optional<Witness> witness;
  std::uint64_t assignments_checked = 0;

  bool holds() const { return status != Status::Fails; }
  /// holds_exhaustive, holds_sampled(k), holds_grid or fails.
  std::string status_name() const;
};

/// A universally quantified property over named variables. `violation`
/// returns the two disagreeing sides when the assignment refutes the law.
struct Law {
  std::string label;
  std::vector<std::string> vars;
  std::function<std::optional<std::pair<Value, Value>>(const std::vector<Value>&)> violation;
};

/// Runs a law over the assignments selected by the mode. Failing verdicts
/// report the least failing assignment in enumeration order, independent of
/// the worker count. Throws CapacityError past kExhaustiveCap and
/// InfiniteCarrierError for exhaustive checks of infinite meadows.
Verdict check_law(const Meadow& m, const Law& law, const CheckOptions& opt);

Law equation_law(const Meadow& m, const Equation& e, const Interpretation& interp = {}, std::string label = "");
Verdict check_equation(const Meadow& m, const Equation& e, const CheckOptions& opt);

/// x != 0 -> x * x^-1 = 1, reported with lhs = x * x^-1 and rhs = 1.
Law inverse_law(const Meadow& m);
Verdict check_IL(const Meadow& m, const CheckOptions& opt);

struct LabeledVerdict {
  std::string label;
  Equation equation;
  Verdict verdict;
};

struct TheoryReport {
  std::string theory;
  std::vector<LabeledVerdict> verdicts;
  bool holds() const;
};

TheoryReport check_theory(const Meadow& m, const Theory& theory, const CheckOptions& opt);

/// (1 - t * t^-1) * (1 - r * r^-1) = 1 for the pair r = 0, t = 0.
Equation combine_pair(const Term& r, const Term& t);
/// s = t as a single term u with u = 0: s itself when t is 0, else s - t.
Term normalize_to_zero(const Equation& e);
/// Folds the list left to right with combine_pair. A single equation is
/// returned unchanged. Throws std::invalid_argument on an empty list.
Equation reduce_to_single(const std::vector<Equation>& eqs);

/// Per-assignment agreement between "every equation holds" and "the
/// combined equation holds"; a violation reports the combined sides.
Law equivalence_law(const Meadow& m, const std::vector<Equation>& eqs, const Equation& combined,
                    const Interpretation& interp = {});

struct PrimeModelCheck {
  std::uint64_t prime = 0;
  bool model = false;  // every equation holds in (Z/pZ)0
  std::optional<std::size_t> failing_equation;
  std::optional<Witness> witness;
};

/// Per-prime satisfaction of E in the prime fields up to a bound. A prime
/// field that models E refutes the claim that Md + E specifies Q0; failure at
/// every prime is evidence only.
struct InitialSpecReport {
  std::uint64_t bound = 0;
  std::vector<PrimeModelCheck> primes;
  std::optional<std::uint64_t> refuting_prime;
  bool refuted() const { return refuting_prime.has_value(); }
};

InitialSpecReport initial_spec_check(const std::vector<Equation>& eqs, std::uint64_t prime_bound, unsigned workers = 1);

struct SeparatingPrimeReport {
  std::set<std::uint64_t> excluded;
  std::uint64_t bound = 0;
  std::optional<std::uint64_t> prime;
  /// Closed checks at the found prime: q * q^-1 = 1 for q in R, then p * p^-1 = 1.
  std::vector<LabeledVerdict> checks;
};

/// Least prime p <= bound outside R such that every q in R is invertible in
/// (Z/pZ)0 while p * p^-1 = 1 fails there.
SeparatingPrimeReport separating_prime(const std::set<std::uint64_t>& excluded, std::uint64_t bound);

struct EkClause {
  std::string label;
  bool holds = false;
  std::string detail;
};

struct EkReport {
  std::uint64_t k = 0;
  std::uint64_t p = 0;
  std::uint64_t modulus = 0;
  std::vector<EkClause> clauses;
  bool all_hold() const;
};

/// Evaluates every clause of E_k in Z/2pZ with the constant a read as p.
/// Requires p an odd prime with p > k.
EkReport check_Ek(std::uint64_t k, std::uint64_t p, unsigned workers = 1);

struct InitialEqualityReport {
  std::uint64_t bound = 0;
  bool distinct = false;  // conclusive when true
  std::optional<std::string> witness_meadow;
  std::string lhs_value;
  std::string rhs_value;
  std::size_t meadows_checked = 0;
};

/// Compares closed s and t in Q0 and every (Z/pZ)0 with p <= bound.
InitialEqualityReport bounded_initial_equality(const Term& s, const Term& t, std::uint64_t prime_bound);

namespace detail {
/// Least index in [0, total) where `make()`-produced predicates report a
/// failure, scanning in chunks over `workers` threads.
std::optional<std::uint64_t> first_failure(std::uint64_t total, unsigned workers,
                                           const std::function<std::function<bool(std::uint64_t)>()>& make);
}  // namespace detail

}  // namespace meadow

#endif  // MEADOW_MODELCHECK_HPP
