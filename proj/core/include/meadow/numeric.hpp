#ifndef MEADOW_NUMERIC_HPP
#define MEADOW_NUMERIC_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace meadow {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& v) : q_(v) {}
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "n" or "n/d" (optional leading '-').
  static Rational parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  const mpq_class& raw() const { return q_; }

  /// Total inverse: 0 maps to 0.
  Rational inverse() const;

  std::string str() const { return q_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  /// Division in the field; throws std::domain_error on a zero divisor.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
  Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
  Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

/// Element of Z/nZ; value is always reduced into [0, modulus).
struct Residue {
  std::uint64_t modulus = 1;
  std::uint64_t value = 0;

  Residue() = default;
  Residue(std::uint64_t n, std::uint64_t v) : modulus(n), value(n == 0 ? v : v % n) {}
  static Residue from(const BigInt& a, std::uint64_t n);

  friend bool operator==(const Residue&, const Residue&) = default;
};

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct SquarefreeResult {
  bool squarefree;
  std::vector<PrimePower> factors;  // ascending primes
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);
/// Inverse of a modulo n when gcd(a, n) = 1; throws std::domain_error otherwise.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n);
std::uint64_t reduce_mod(const BigInt& a, std::uint64_t n);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);
/// Ascending list of primes p <= hi.
std::vector<std::uint64_t> primes_up_to(std::uint64_t hi);

/// Complete factorization (trial division + Pollard rho), ascending primes.
std::vector<PrimePower> factorize(std::uint64_t n);
SquarefreeResult is_squarefree(std::uint64_t n);

/// Legendre symbol via Euler's criterion. Throws std::invalid_argument
/// unless p is an odd prime.
int legendre(const BigInt& a, std::uint64_t p);

/// Thrown when Z/nZ has an element without a weak inverse.
class NotSquarefreeError : public std::invalid_argument {
 public:
  NotSquarefreeError(std::uint64_t modulus, std::uint64_t witness);
  std::uint64_t modulus() const { return modulus_; }
  /// An element a with no y satisfying a*y*a = a (mod n).
  std::uint64_t witness() const { return witness_; }

 private:
  std::uint64_t modulus_;
  std::uint64_t witness_;
};

/// The unique y with a*y*a = a and y*a*y = y (mod n), computed prime by
/// prime and recombined with the CRT. n must be squarefree.
Residue weak_inverse_mod(const BigInt& a, std::uint64_t n);
/// Same, for a factorization already known to be squarefree.
std::uint64_t weak_inverse_mod(std::uint64_t a, std::uint64_t n,
                               const std::vector<std::uint64_t>& primes);

/// Least element of Z/nZ lacking a weak inverse, if any.
std::optional<std::uint64_t> non_regular_witness(std::uint64_t n);

/// Parses a non-negative decimal integer that fits in 64 bits.
std::uint64_t parse_u64(std::string_view text);

}  // namespace meadow

#endif  // MEADOW_NUMERIC_HPP
