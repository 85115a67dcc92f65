#ifndef MEADOW_SIGNEXP_HPP
#define MEADOW_SIGNEXP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "meadow/congruence.hpp"
#include "meadow/meadows.hpp"
#include "meadow/modelcheck.hpp"
#include "meadow/term.hpp"

namespace meadow {

/// Thrown for meadows without a built-in ordering (anything other than Q0
/// and finite products of Q0).
class UnorderedMeadowError : public std::invalid_argument {
 public:
  explicit UnorderedMeadowError(const std::string& meadow);
};

/// True for q0 and products whose factors are all ordered.
bool is_ordered(const Meadow& m);
/// -1, 0 or 1, componentwise on products.
Value sign(const Meadow& m, const Value& x);
/// Interpretation binding `s` to the sign function of m.
Interpretation sign_interpretation(const MeadowPtr& m);

/// {-2, -1, -1/2, 0, 1/2, 1, 2} in Q0; for a product, every tuple over it.
std::vector<Value> default_sign_grid(const Meadow& m);
/// Parses "a,b,c" rationals into a grid for m (tuples range over the grid
/// in every component).
std::vector<Value> parse_sign_grid(const Meadow& m, std::string_view csv);

inline constexpr std::uint64_t kSignSamples = 200;

struct SignSuiteReport {
  std::string meadow;
  std::uint64_t seed = 0;
  std::uint64_t grid_size = 0;
  /// Grid verdicts first (label "S1".."S6"), then seeded samples ("S1 sampled").
  std::vector<LabeledVerdict> verdicts;
  bool holds() const;
};

/// S1-S6 at every grid tuple, then on seeded samples.
SignSuiteReport check_signs(const MeadowPtr& m, const std::vector<Value>& grid, std::uint64_t samples,
                            std::uint64_t seed, unsigned workers = 1);

struct LawReport {
  std::string label;
  Verdict verdict;
};

/// OF1-OF4 over every grid tuple of Q0 with the usual order.
std::vector<LawReport> check_order_axioms(const std::vector<Rational>& grid, unsigned workers = 1);
std::vector<Rational> default_order_grid();

/// Assignments per EFR instance on grid checks.
inline constexpr std::uint64_t kEfrGridBudget = 200'000;

/// EFR instances n = 0..max_n; exhaustive on finite meadows. Ordered infinite
/// meadows use the sign grid, shrinking to the {-1, 0, 1} and then {0, 1}
/// grids for instances whose assignment count exceeds kEfrGridBudget.
TheoryReport check_efr(const MeadowPtr& m, std::uint64_t max_n, unsigned workers = 1);

/// (Z/2Z)0 x (Z/3Z)0.
MeadowPtr eq_base_meadow();
/// eq(x, y) = 1 if x = y, else 0.
Interpretation eq_interpretation(const MeadowPtr& m);
/// eq(x, x) = 1 and eq(i, j) = 0 for numerals 0 <= i != j <= 5.
std::vector<Equation> eq_defining_equations();
/// eq(x * x^-1, 1) = x * x^-1.
Equation eq_counterexample_equation();

struct EqMeadowReport {
  std::vector<LabeledVerdict> defining;  // all exhaustive
  LabeledVerdict counterexample;
  /// Evaluation at the displayed point x = <1,0>.
  std::string displayed_x;
  std::string displayed_lhs;
  std::string displayed_rhs;
  std::size_t expanded_congruences = 0;
  std::size_t reduct_congruences = 0;
  bool expanded_simple = false;
  bool reduct_subdirectly_irreducible = true;
  std::string inverse_of_displayed;  // <1,0>^-1
  Verdict inverse_law;

  bool matches_expected() const;
};

EqMeadowReport eq_meadow_checks(unsigned workers = 1);

/// x^2 - 2 has no rational root, so Q0 has no signed square root of 2.
std::optional<Rational> sqrt2_rational_root();

}  // namespace meadow

#endif  // MEADOW_SIGNEXP_HPP
