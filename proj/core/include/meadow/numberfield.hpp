#ifndef MEADOW_NUMBERFIELD_HPP
#define MEADOW_NUMBERFIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "meadow/meadows.hpp"
#include "meadow/modelcheck.hpp"
#include "meadow/poly.hpp"
#include "meadow/term.hpp"

namespace meadow {

/// Normal form a0 + a1*c + ... + a_{n-1}*c^{n-1} of a closed term over the
/// constant c in Q0(c) = Q[x]/(g), computed by structural recursion:
/// ring operations reduce modulo g, inversion goes through the extended
/// Euclidean algorithm, and 0^-1 = 0. The result has exactly deg g entries.
/// Throws ReducibleModulusError when an inversion exposes a factor of g and
/// std::invalid_argument for variables, other constants or function symbols.
std::vector<Rational> ext_normal_form(const Term& t, const Poly& g, const std::string& constant = "c");

struct RandomTermOptions {
  unsigned max_depth = 12;
  unsigned weight_add = 3;
  unsigned weight_mul = 3;
  unsigned weight_neg = 2;
  unsigned weight_inv = 2;
  unsigned weight_leaf = 4;
  std::uint64_t max_numeral = 5;  // numeral leaves 2..max_numeral
};

/// Random closed term with leaves 0, 1, the constant (if non-empty) and small
/// numerals. Deterministic in the generator state.
Term random_closed_term(SplitMix64& rng, const std::string& constant, const RandomTermOptions& opt = {});

/// scale * (x^2 - p0) * (x^2 - p1) * (x^2 - p0*p1).
Poly single_spec_poly(std::uint64_t p0, std::uint64_t p1, std::uint64_t scale = 2);
/// Term for an integer-coefficient polynomial evaluated at `at`.
Term poly_term(const Poly& f, const Term& at);
/// f(x) * f(x)^-1 = 1.
Equation single_spec_equation(const Poly& f, const std::string& var = "x");

struct PrimeDiscrepancy {
  std::uint64_t prime = 0;
  std::string detail;
};

struct SingleSpecReport {
  std::uint64_t p0 = 0;
  std::uint64_t p1 = 0;
  std::uint64_t bound = 0;
  Poly f;
  std::optional<Rational> rational_root;
  std::uint64_t primes_checked = 0;
  std::vector<std::uint64_t> primes_without_root;
  std::uint64_t legendre_checked = 0;
  std::vector<PrimeDiscrepancy> discrepancies;
  /// Least root found at each of the first few primes, for display.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> sample_roots;

  bool passed() const { return !rational_root && primes_without_root.empty() && discrepancies.empty(); }
};

/// Checks that f = 2(x^2-p0)(x^2-p1)(x^2-p0p1) has no rational root, has a
/// root modulo every prime up to the bound, and that at every odd prime the
/// Legendre symbols of p0, p1 and p0*p1 agree with the scan.
SingleSpecReport verify_single_spec(std::uint64_t p0, std::uint64_t p1, std::uint64_t prime_bound, unsigned workers = 1);

/// Constants plus defining relations of a meadow.
struct Presentation {
  std::vector<std::string> constants;
  std::vector<Equation> relations;
};
Presentation load_presentation(const std::string& path);
Presentation parse_presentation(std::string_view text);

struct RelationCheck {
  Equation relation;
  CheckMode mode;
  Verdict verdict;
};

struct PresentationReport {
  std::string meadow;
  std::uint64_t seed = 0;
  std::vector<RelationCheck> relations;
  std::uint64_t trials = 0;
  std::uint64_t normalized = 0;     // trials whose normal form has deg g entries
  std::uint64_t zero_forms = 0;     // trials normalizing to 0
  std::uint64_t roundtrips = 0;     // nf(t * t^-1) = 1 checks performed
  std::vector<std::string> failures;  // one line per failed trial

  bool relations_hold() const;
  bool passed() const { return relations_hold() && failures.empty() && normalized == trials; }
};

/// Monic polynomial of the first closed relation that is a polynomial of
/// positive degree in the presentation's constant.
std::optional<Poly> minpoly_from_relations(const Presentation& p);

inline constexpr std::uint64_t kRelationSamples = 200;

/// Checks a one-generator presentation against Q0(c) = Q[x]/(g): closed
/// relations exactly, relations with variables on kRelationSamples seeded
/// samples plus probes; then normalizes `trials` random closed terms and
/// confirms nf(t) * nf(t^-1) = 1 and nf(t * t^-1) = 1 whenever nf(t) != 0.
/// With no constants the ambient meadow is Q0.
PresentationReport verify_presentation(const Presentation& p, const std::optional<Poly>& minpoly, std::uint64_t trials,
                                       std::uint64_t seed, unsigned workers = 1);

}  // namespace meadow

#endif  // MEADOW_NUMBERFIELD_HPP
