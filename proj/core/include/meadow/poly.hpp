#ifndef MEADOW_POLY_HPP
#define MEADOW_POLY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meadow/numeric.hpp"
#include "meadow/term.hpp"

namespace meadow {

/// Dense univariate polynomial over Q. Coefficient i belongs to x^i;
/// trailing zeros are always stripped, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly x();
  static Poly monomial(const Rational& c, std::size_t k);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& lead() const;
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Poly monic() const;
  Rational eval(const Rational& at) const;
  /// Reduction of every coefficient modulo p; nullopt if some denominator
  /// vanishes mod p.
  std::optional<std::vector<std::uint64_t>> mod_p(std::uint64_t p) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& a);
  Poly operator-() const;
  friend bool operator==(const Poly&, const Poly&) = default;

  std::string str(std::string_view var = "x") const;

 private:
  void strip();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};
/// Euclidean division; throws std::domain_error for a zero divisor.
DivMod divmod(const Poly& a, const Poly& b);

/// gcd is monic and h * g + h_prime * p == gcd exactly.
struct ExtGcd {
  Poly gcd;
  Poly h;
  Poly h_prime;
};
/// Throws std::invalid_argument if both inputs are zero.
ExtGcd poly_ext_gcd(const Poly& p, const Poly& g);

/// Raised when inverting modulo g exposes a nontrivial factor of g.
class ReducibleModulusError : public std::domain_error {
 public:
  ReducibleModulusError(Poly modulus, Poly factor);
  const Poly& modulus() const { return modulus_; }
  const Poly& factor() const { return factor_; }

 private:
  Poly modulus_;
  Poly factor_;
};

/// Total inverse of a modulo g (0 maps to 0), reduced below deg g.
Poly inverse_mod(const Poly& a, const Poly& g);

/// Least rational root by the rational-root theorem; throws for the zero
/// polynomial.
std::optional<Rational> has_rational_root(const Poly& f);

/// All residues r in [0, p) with f(r) = 0 mod p, by exhaustive scan.
std::vector<std::uint64_t> roots_mod_p(const Poly& f, std::uint64_t p);
/// Least such residue, stopping at the first hit.
std::optional<std::uint64_t> first_root_mod_p(const Poly& f, std::uint64_t p);

/// Reads a term over a single variable as an element of Q[var]. Inversion is
/// allowed on subterms that are constants (0^-1 = 0).
Poly term_to_poly(const Term& t, const std::string& var);
Poly parse_poly(std::string_view text, const std::string& var = "x");

}  // namespace meadow

#endif  // MEADOW_POLY_HPP
