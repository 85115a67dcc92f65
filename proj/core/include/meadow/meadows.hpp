#ifndef MEADOW_MEADOWS_HPP
#define MEADOW_MEADOWS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "meadow/numeric.hpp"
#include "meadow/poly.hpp"

namespace meadow {

struct Value;

/// Coefficient vector a0 + a1*c + ... of an element of Q0(c).
struct ExtValue {
  std::vector<Rational> coeffs;
  friend bool operator==(const ExtValue&, const ExtValue&) = default;
};

struct TupleValue {
  std::vector<Value> parts;
};

/// An element of some meadow. Which alternative is live is dictated by the
/// meadow the value belongs to.
struct Value {
  std::variant<Rational, Residue, ExtValue, TupleValue> data;

  Value() = default;
  Value(Rational r) : data(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Value(Residue r) : data(r) {}              // NOLINT(google-explicit-constructor)
  Value(ExtValue e) : data(std::move(e)) {}  // NOLINT(google-explicit-constructor)
  Value(TupleValue t) : data(std::move(t)) {}  // NOLINT(google-explicit-constructor)
  static Value tuple(std::vector<Value> parts) { return Value(TupleValue{std::move(parts)}); }

  bool is_rational() const { return std::holds_alternative<Rational>(data); }
  bool is_residue() const { return std::holds_alternative<Residue>(data); }
  bool is_ext() const { return std::holds_alternative<ExtValue>(data); }
  bool is_tuple() const { return std::holds_alternative<TupleValue>(data); }
  const Rational& rational() const { return std::get<Rational>(data); }
  const Residue& residue() const { return std::get<Residue>(data); }
  const ExtValue& ext() const { return std::get<ExtValue>(data); }
  const std::vector<Value>& parts() const { return std::get<TupleValue>(data).parts; }

  std::size_t hash() const;
};

bool operator==(const TupleValue& a, const TupleValue& b);
bool operator==(const Value& a, const Value& b);
inline bool operator!=(const Value& a, const Value& b) { return !(a == b); }

struct ValueHash {
  std::size_t operator()(const Value& v) const noexcept { return v.hash(); }
};

/// Deterministic 64-bit generator (splitmix64); identical streams on every
/// platform for a given seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, n) for n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};
/// Seed for the k-th independent substream of `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k);

class InfiniteCarrierError : public std::logic_error {
 public:
  explicit InfiniteCarrierError(const std::string& meadow);
};

class ForeignValueError : public std::invalid_argument {
 public:
  ForeignValueError(const std::string& meadow, const std::string& detail);
};

/// Default half-width B of the numerator/denominator range for sampled
/// rationals n/d, n in [-B, B], d in [1, B].
inline constexpr std::int64_t kRationalSampleBound = 100;

/// A realized meadow. Instances are immutable and safe to share between
/// threads. Finite meadows also number their elements 0..size()-1 and offer
/// index-level operations for fast enumeration.
class Meadow {
 public:
  virtual ~Meadow() = default;

  /// Canonical descriptor string, e.g. "prod:[zp:2,zp:3]".
  virtual std::string descriptor() const = 0;

  virtual Value zero() const = 0;
  virtual Value one() const = 0;
  virtual Value add(const Value& a, const Value& b) const = 0;
  virtual Value neg(const Value& a) const = 0;
  virtual Value mul(const Value& a, const Value& b) const = 0;
  /// Total inversion: field inverse where it exists, weak inverse otherwise.
  virtual Value inv(const Value& a) const = 0;
  virtual bool contains(const Value& v) const = 0;
  /// Image of the integer n (the value of the numeral n, negated if n < 0).
  virtual Value from_integer(const BigInt& n) const = 0;

  virtual std::string format(const Value& v) const = 0;
  virtual Value parse_value(std::string_view text) const = 0;

  /// Degenerate points every sampled check visits first.
  virtual std::vector<Value> probes() const = 0;
  virtual Value sample(SplitMix64& rng) const = 0;

  virtual std::optional<std::uint64_t> cardinality() const { return std::nullopt; }
  bool is_finite() const { return cardinality().has_value(); }

  // Finite carriers. Infinite meadows throw InfiniteCarrierError.
  std::uint64_t size() const;
  virtual Value element(std::uint64_t index) const;
  virtual std::uint64_t index_of(const Value& v) const;
  virtual std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const;
  virtual std::uint64_t neg_index(std::uint64_t a) const;
  virtual std::uint64_t mul_index(std::uint64_t a, std::uint64_t b) const;
  virtual std::uint64_t inv_index(std::uint64_t a) const;
  std::uint64_t zero_index() const { return index_of(zero()); }
  std::uint64_t one_index() const { return index_of(one()); }

  Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }
  bool equal(const Value& a, const Value& b) const { return a == b; }

 protected:
  [[noreturn]] void foreign(const Value& v) const;
};

using MeadowPtr = std::shared_ptr<const Meadow>;

/// Q0: the rationals with 0^-1 = 0.
class RationalMeadow final : public Meadow {
 public:
  std::string descriptor() const override { return "q0"; }
  Value zero() const override { return Rational(0); }
  Value one() const override { return Rational(1); }
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value inv(const Value& a) const override;
  bool contains(const Value& v) const override { return v.is_rational(); }
  Value from_integer(const BigInt& n) const override { return Rational(n); }
  std::string format(const Value& v) const override;
  Value parse_value(std::string_view text) const override;
  std::vector<Value> probes() const override;
  Value sample(SplitMix64& rng) const override;

 private:
  const Rational& get(const Value& v) const;
};

/// Z/nZ for squarefree n, which covers the prime fields (Z/pZ)0.
class ModularMeadow final : public Meadow {
 public:
  /// Throws NotSquarefreeError (with a witness) unless n is squarefree.
  /// `prime_field` selects the zp: spelling and requires n prime.
  ModularMeadow(std::uint64_t n, bool prime_field);

  std::uint64_t modulus() const { return n_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

  std::string descriptor() const override;
  Value zero() const override { return Residue(n_, 0); }
  Value one() const override { return Residue(n_, 1); }
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value inv(const Value& a) const override;
  bool contains(const Value& v) const override;
  Value from_integer(const BigInt& n) const override { return Residue::from(n, n_); }
  std::string format(const Value& v) const override;
  Value parse_value(std::string_view text) const override;
  std::vector<Value> probes() const override;
  Value sample(SplitMix64& rng) const override;

  std::optional<std::uint64_t> cardinality() const override { return n_; }
  Value element(std::uint64_t index) const override { return Residue(n_, index); }
  std::uint64_t index_of(const Value& v) const override;
  std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const override;
  std::uint64_t neg_index(std::uint64_t a) const override { return a == 0 ? 0 : n_ - a; }
  std::uint64_t mul_index(std::uint64_t a, std::uint64_t b) const override { return mul_mod(a, b, n_); }
  std::uint64_t inv_index(std::uint64_t a) const override;

 private:
  std::uint64_t n_;
  bool prime_field_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::uint64_t> inverse_table_;  // filled for small moduli
};

/// Direct product; every operation is componentwise.
class ProductMeadow final : public Meadow {
 public:
  explicit ProductMeadow(std::vector<MeadowPtr> factors);

  const std::vector<MeadowPtr>& factors() const { return factors_; }
  /// Projection onto factor i.
  Value project(const Value& v, std::size_t i) const;

  std::string descriptor() const override;
  Value zero() const override;
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value inv(const Value& a) const override;
  bool contains(const Value& v) const override;
  Value from_integer(const BigInt& n) const override;
  std::string format(const Value& v) const override;
  Value parse_value(std::string_view text) const override;
  std::vector<Value> probes() const override;
  Value sample(SplitMix64& rng) const override;

  std::optional<std::uint64_t> cardinality() const override { return card_; }
  Value element(std::uint64_t index) const override;
  std::uint64_t index_of(const Value& v) const override;
  std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const override;
  std::uint64_t neg_index(std::uint64_t a) const override;
  std::uint64_t mul_index(std::uint64_t a, std::uint64_t b) const override;
  std::uint64_t inv_index(std::uint64_t a) const override;

 private:
  template <class F>
  std::uint64_t combine(std::uint64_t a, std::uint64_t b, F&& f) const;
  const std::vector<Value>& get(const Value& v) const;

  std::vector<MeadowPtr> factors_;
  std::optional<std::uint64_t> card_;
  std::vector<std::uint64_t> strides_;  // first factor most significant
};

/// Q0(c) = Q[x]/(g) with total inversion, g monic.
class ExtensionMeadow final : public Meadow {
 public:
  /// Throws std::invalid_argument for non-monic or constant g, and
  /// ReducibleModulusError when a degree <= 3 g has a rational root.
  explicit ExtensionMeadow(Poly minpoly, std::string generator = "c");

  const Poly& minpoly() const { return g_; }
  std::size_t degree() const { return static_cast<std::size_t>(g_.degree()); }
  /// True when irreducibility was not verified (degree > 3).
  bool assumed_irreducible() const { return assumed_irreducible_; }
  /// The adjoined element c itself.
  Value generator() const;
  const std::string& generator_name() const { return gen_name_; }

  Value from_poly(const Poly& p) const;
  Poly to_poly(const Value& v) const;

  std::string descriptor() const override;
  Value zero() const override;
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value inv(const Value& a) const override;
  bool contains(const Value& v) const override;
  Value from_integer(const BigInt& n) const override;
  std::string format(const Value& v) const override;
  Value parse_value(std::string_view text) const override;
  std::vector<Value> probes() const override;
  Value sample(SplitMix64& rng) const override;

 private:
  const ExtValue& get(const Value& v) const;
  Poly g_;
  std::string gen_name_;
  bool assumed_irreducible_ = false;
};

/// Least subalgebra of a parent meadow containing 0, 1 and the generators,
/// materialized with full operation tables.
class GeneratedMeadow final : public Meadow {
 public:
  /// Largest carrier the closure may reach before giving up.
  static constexpr std::uint64_t kMaxElements = 2048;

  /// `limit` bounds the closure; required (non-empty) for infinite parents.
  GeneratedMeadow(MeadowPtr parent, std::vector<Value> generators, std::optional<std::uint64_t> limit = std::nullopt);

  const MeadowPtr& parent() const { return parent_; }
  const std::vector<Value>& generators() const { return gens_; }
  const std::vector<Value>& carrier() const { return elements_; }

  std::string descriptor() const override;
  Value zero() const override { return elements_[0]; }
  Value one() const override { return elements_[one_]; }
  Value add(const Value& a, const Value& b) const override { return elements_[add_index(index_of(a), index_of(b))]; }
  Value neg(const Value& a) const override { return elements_[neg_index(index_of(a))]; }
  Value mul(const Value& a, const Value& b) const override { return elements_[mul_index(index_of(a), index_of(b))]; }
  Value inv(const Value& a) const override { return elements_[inv_index(index_of(a))]; }
  bool contains(const Value& v) const override;
  Value from_integer(const BigInt& n) const override { return parent_->from_integer(n); }
  std::string format(const Value& v) const override { return parent_->format(v); }
  Value parse_value(std::string_view text) const override;
  std::vector<Value> probes() const override;
  Value sample(SplitMix64& rng) const override { return elements_[rng.below(elements_.size())]; }

  std::optional<std::uint64_t> cardinality() const override { return elements_.size(); }
  Value element(std::uint64_t index) const override { return elements_.at(index); }
  std::uint64_t index_of(const Value& v) const override;
  std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const override { return add_[a * elements_.size() + b]; }
  std::uint64_t neg_index(std::uint64_t a) const override { return neg_[a]; }
  std::uint64_t mul_index(std::uint64_t a, std::uint64_t b) const override { return mul_[a * elements_.size() + b]; }
  std::uint64_t inv_index(std::uint64_t a) const override { return inv_[a]; }

 private:
  MeadowPtr parent_;
  std::vector<Value> gens_;
  std::vector<Value> elements_;
  std::uint64_t one_ = 0;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
  std::unordered_map<Value, std::uint32_t, ValueHash> lookup_;
};

struct MeadowDescriptor {
  enum class Kind { Q0, PrimeField0, SquarefreeMod, Product, Extension, Generated };
  Kind kind = Kind::Q0;
  std::uint64_t modulus = 0;                 // PrimeField0, SquarefreeMod
  std::vector<MeadowDescriptor> children;    // Product factors; Generated parent
  std::string minpoly;                       // Extension, over x
  std::string generator = "c";               // Extension: name of the adjoined element
  std::vector<std::string> generators;       // Generated
  std::optional<std::uint64_t> limit;        // Generated

  /// `q0`, `zp:7`, `zsf:30`, `prod:[zp:2,zp:3]`, `ext:[x^2+1]` (or
  /// `ext:[x^2+1;i]` to name the generator), `gen:[parent;v1;v2;limit=N]`.
  static MeadowDescriptor parse(std::string_view text);
  std::string str() const;
};

MeadowPtr make_meadow(const MeadowDescriptor& d);
MeadowPtr make_meadow(std::string_view descriptor);

/// Generated subalgebra of a finite meadow (or a bounded closure).
std::shared_ptr<const GeneratedMeadow> generated_subalgebra(const MeadowPtr& m, std::vector<Value> gens,
                                                            std::optional<std::uint64_t> limit = std::nullopt);

/// The CRT isomorphism Z/nZ <-> (Z/p1Z)0 x ... x (Z/pkZ)0 for squarefree n.
class CrtIso {
 public:
  explicit CrtIso(std::uint64_t n);
  const std::shared_ptr<const ModularMeadow>& ring() const { return ring_; }
  const std::shared_ptr<const ProductMeadow>& product() const { return product_; }
  Value to_product(const Value& residue) const;
  Value from_product(const Value& tuple) const;

 private:
  std::shared_ptr<const ModularMeadow> ring_;
  std::shared_ptr<const ProductMeadow> product_;
  std::vector<std::uint64_t> idempotents_;  // e_i = 1 mod p_i, 0 mod p_j
};

}  // namespace meadow

#endif  // MEADOW_MEADOWS_HPP
