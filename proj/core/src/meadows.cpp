#include "meadow/meadows.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace meadow {

// ---------------------------------------------------------------------------
// Value

bool operator==(const TupleValue& a, const TupleValue& b) { return a.parts == b.parts; }
bool operator==(const Value& a, const Value& b) { return a.data == b.data; }

namespace {
std::size_t mix(std::size_t h, std::size_t v) { return (h ^ v) * 1099511628211ULL + 0x9e3779b97f4a7c15ULL; }

std::size_t hash_big(const BigInt& z) {
  return static_cast<std::size_t>(mpz_get_ui(z.get_mpz_t())) ^ (static_cast<std::size_t>(sgn(z)) << 62) ^
         mpz_size(z.get_mpz_t());
}
std::size_t hash_rational(const Rational& r) { return mix(hash_big(r.num()), hash_big(r.den())); }
}  // namespace

std::size_t Value::hash() const {
  std::size_t h = data.index();
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>) {
          h = mix(h, hash_rational(x));
        } else if constexpr (std::is_same_v<T, Residue>) {
          h = mix(mix(h, x.modulus), x.value);
        } else if constexpr (std::is_same_v<T, ExtValue>) {
          for (const auto& c : x.coeffs) h = mix(h, hash_rational(c));
        } else {
          for (const auto& p : x.parts) h = mix(h, p.hash());
        }
      },
      data);
  return h;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % n;
}

std::int64_t SplitMix64::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  SplitMix64 a(seed ^ (k * 0xd1b54a32d192ed03ULL));
  a.next();
  return a.next() ^ k;
}

InfiniteCarrierError::InfiniteCarrierError(const std::string& meadow)
    : std::logic_error(meadow + " is infinite; its carrier cannot be enumerated") {}

ForeignValueError::ForeignValueError(const std::string& meadow, const std::string& detail)
    : std::invalid_argument("value does not belong to " + meadow + ": " + detail) {}

// ---------------------------------------------------------------------------
// Meadow defaults

std::uint64_t Meadow::size() const {
  auto c = cardinality();
  if (!c) throw InfiniteCarrierError(descriptor());
  return *c;
}
Value Meadow::element(std::uint64_t) const { throw InfiniteCarrierError(descriptor()); }
std::uint64_t Meadow::index_of(const Value&) const { throw InfiniteCarrierError(descriptor()); }
std::uint64_t Meadow::add_index(std::uint64_t, std::uint64_t) const { throw InfiniteCarrierError(descriptor()); }
std::uint64_t Meadow::neg_index(std::uint64_t) const { throw InfiniteCarrierError(descriptor()); }
std::uint64_t Meadow::mul_index(std::uint64_t, std::uint64_t) const { throw InfiniteCarrierError(descriptor()); }
std::uint64_t Meadow::inv_index(std::uint64_t) const { throw InfiniteCarrierError(descriptor()); }

void Meadow::foreign(const Value& v) const {
  static constexpr const char* kKinds[] = {"rational", "residue", "extension vector", "tuple"};
  std::string detail = kKinds[v.data.index()];
  if (v.is_residue()) detail += " mod " + std::to_string(v.residue().modulus);
  if (v.is_tuple()) detail += " of arity " + std::to_string(v.parts().size());
  if (v.is_ext()) detail += " of length " + std::to_string(v.ext().coeffs.size());
  throw ForeignValueError(descriptor(), detail);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on `sep` outside of (), [] and <> nesting.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[' || c == '<') ++depth;
    if (c == ')' || c == ']' || c == '>') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced brackets in '" + std::string(s) + "'");
    if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced brackets in '" + std::string(s) + "'");
  out.push_back(trim(s.substr(start)));
  return out;
}

// "a", "a/b" in any meadow: the image of a times the inverse image of b.
Value scalar_literal(const Meadow& m, std::string_view text) {
  const Rational r = Rational::parse(text);
  return m.mul(m.from_integer(r.num()), m.inv(m.from_integer(r.den())));
}

}  // namespace

// ---------------------------------------------------------------------------
// Q0

const Rational& RationalMeadow::get(const Value& v) const {
  if (!v.is_rational()) foreign(v);
  return v.rational();
}
Value RationalMeadow::add(const Value& a, const Value& b) const { return get(a) + get(b); }
Value RationalMeadow::neg(const Value& a) const { return -get(a); }
Value RationalMeadow::mul(const Value& a, const Value& b) const { return get(a) * get(b); }
Value RationalMeadow::inv(const Value& a) const { return get(a).inverse(); }
std::string RationalMeadow::format(const Value& v) const { return get(v).str(); }
Value RationalMeadow::parse_value(std::string_view text) const { return Rational::parse(text); }

std::vector<Value> RationalMeadow::probes() const {
  return {Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(2), Rational(-2)};
}

Value RationalMeadow::sample(SplitMix64& rng) const {
  const auto n = rng.between(-kRationalSampleBound, kRationalSampleBound);
  const auto d = rng.between(1, kRationalSampleBound);
  return Rational(BigInt(static_cast<long>(n)), BigInt(static_cast<long>(d)));
}

// ---------------------------------------------------------------------------
// Z/nZ

ModularMeadow::ModularMeadow(std::uint64_t n, bool prime_field) : n_(n), prime_field_(prime_field) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  if (prime_field && !is_prime(n)) throw std::invalid_argument("zp: needs a prime, " + std::to_string(n) + " is not");
  const auto sf = is_squarefree(n);
  if (!sf.squarefree) throw NotSquarefreeError(n, *non_regular_witness(n));
  for (const auto& pp : sf.factors) primes_.push_back(pp.prime);
  if (n <= (1u << 16)) {
    inverse_table_.resize(n);
    for (std::uint64_t a = 0; a < n; ++a) inverse_table_[a] = weak_inverse_mod(a, n, primes_);
  }
}

std::string ModularMeadow::descriptor() const { return (prime_field_ ? "zp:" : "zsf:") + std::to_string(n_); }

bool ModularMeadow::contains(const Value& v) const { return v.is_residue() && v.residue().modulus == n_; }

std::uint64_t ModularMeadow::index_of(const Value& v) const {
  if (!contains(v)) foreign(v);
  return v.residue().value;
}

std::uint64_t ModularMeadow::add_index(std::uint64_t a, std::uint64_t b) const {
  return a >= n_ - b ? a - (n_ - b) : a + b;
}

std::uint64_t ModularMeadow::inv_index(std::uint64_t a) const {
  if (!inverse_table_.empty()) return inverse_table_[a];
  return weak_inverse_mod(a, n_, primes_);
}

Value ModularMeadow::add(const Value& a, const Value& b) const {
  return Residue(n_, add_index(index_of(a), index_of(b)));
}
Value ModularMeadow::neg(const Value& a) const { return Residue(n_, neg_index(index_of(a))); }
Value ModularMeadow::mul(const Value& a, const Value& b) const {
  return Residue(n_, mul_index(index_of(a), index_of(b)));
}
Value ModularMeadow::inv(const Value& a) const { return Residue(n_, inv_index(index_of(a))); }

std::string ModularMeadow::format(const Value& v) const { return std::to_string(index_of(v)); }

Value ModularMeadow::parse_value(std::string_view text) const { return scalar_literal(*this, text); }

std::vector<Value> ModularMeadow::probes() const {
  std::vector<Value> out;
  if (n_ <= 8) {
    for (std::uint64_t i = 0; i < n_; ++i) out.emplace_back(Residue(n_, i));
    return out;
  }
  for (std::uint64_t i : {std::uint64_t{0}, std::uint64_t{1}, n_ - 1, std::uint64_t{2}}) {
    out.emplace_back(Residue(n_, i));
  }
  return out;
}

Value ModularMeadow::sample(SplitMix64& rng) const { return Residue(n_, rng.below(n_)); }

// ---------------------------------------------------------------------------
// Products

ProductMeadow::ProductMeadow(std::vector<MeadowPtr> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("a product needs at least one factor");
  std::uint64_t card = 1;
  bool finite = true;
  for (const auto& f : factors_) {
    auto c = f->cardinality();
    if (!c) {
      finite = false;
      break;
    }
    if (*c != 0 && card > ~std::uint64_t{0} / *c) throw std::invalid_argument("product carrier exceeds 64-bit indexing");
    card *= *c;
  }
  if (finite) {
    card_ = card;
    strides_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size() - 1; i-- > 0;) strides_[i] = strides_[i + 1] * *factors_[i + 1]->cardinality();
  }
}

std::string ProductMeadow::descriptor() const {
  std::string out = "prod:[";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ',';
    out += factors_[i]->descriptor();
  }
  return out + "]";
}

const std::vector<Value>& ProductMeadow::get(const Value& v) const {
  if (!v.is_tuple() || v.parts().size() != factors_.size()) foreign(v);
  return v.parts();
}

Value ProductMeadow::project(const Value& v, std::size_t i) const { return get(v).at(i); }

Value ProductMeadow::zero() const {
  std::vector<Value> p;
  for (const auto& f : factors_) p.push_back(f->zero());
  return Value::tuple(std::move(p));
}

Value ProductMeadow::one() const {
  std::vector<Value> p;
  for (const auto& f : factors_) p.push_back(f->one());
  return Value::tuple(std::move(p));
}

Value ProductMeadow::add(const Value& a, const Value& b) const {
  const auto& x = get(a);
  const auto& y = get(b);
  std::vector<Value> p;
  for (std::size_t i = 0; i < factors_.size(); ++i) p.push_back(factors_[i]->add(x[i], y[i]));
  return Value::tuple(std::move(p));
}

Value ProductMeadow::mul(const Value& a, const Value& b) const {
  const auto& x = get(a);
  const auto& y = get(b);
  std::vector<Value> p;
  for (std::size_t i = 0; i < factors_.size(); ++i) p.push_back(factors_[i]->mul(x[i], y[i]));
  return Value::tuple(std::move(p));
}

Value ProductMeadow::neg(const Value& a) const {
  const auto& x = get(a);
  std::vector<Value> p;
  for (std::size_t i = 0; i < factors_.size(); ++i) p.push_back(factors_[i]->neg(x[i]));
  return Value::tuple(std::move(p));
}

Value ProductMeadow::inv(const Value& a) const {
  const auto& x = get(a);
  std::vector<Value> p;
  for (std::size_t i = 0; i < factors_.size(); ++i) p.push_back(factors_[i]->inv(x[i]));
  return Value::tuple(std::move(p));
}

bool ProductMeadow::contains(const Value& v) const {
  if (!v.is_tuple() || v.parts().size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (!factors_[i]->contains(v.parts()[i])) return false;
  }
  return true;
}

Value ProductMeadow::from_integer(const BigInt& n) const {
  std::vector<Value> p;
  for (const auto& f : factors_) p.push_back(f->from_integer(n));
  return Value::tuple(std::move(p));
}

std::string ProductMeadow::format(const Value& v) const {
  const auto& x = get(v);
  std::string out = "<";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += factors_[i]->format(x[i]);
  }
  return out + ">";
}

Value ProductMeadow::parse_value(std::string_view text) const {
  text = trim(text);
  if (text.empty() || text.front() != '<') return scalar_literal(*this, text);
  if (text.back() != '>') throw std::invalid_argument("tuple literal must end with '>'");
  const auto items = split_top(text.substr(1, text.size() - 2), ',');
  if (items.size() != factors_.size()) {
    throw std::invalid_argument("tuple literal has " + std::to_string(items.size()) + " components, " + descriptor() +
                                " needs " + std::to_string(factors_.size()));
  }
  std::vector<Value> p;
  for (std::size_t i = 0; i < items.size(); ++i) p.push_back(factors_[i]->parse_value(items[i]));
  return Value::tuple(std::move(p));
}

std::vector<Value> ProductMeadow::probes() const {
  constexpr std::size_t kMaxProbes = 4096;
  std::vector<Value> out;
  std::unordered_map<Value, bool, ValueHash> seen;
  auto push = [&](Value v) {
    if (seen.emplace(v, true).second) out.push_back(std::move(v));
  };
  // Unit idempotents e_i first: the canonical zero divisors of a product.
  if (factors_.size() > 1) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      std::vector<Value> p;
      for (std::size_t j = 0; j < factors_.size(); ++j) p.push_back(i == j ? factors_[j]->one() : factors_[j]->zero());
      push(Value::tuple(std::move(p)));
    }
  }
  std::vector<std::vector<Value>> component;
  std::size_t total = 1;
  for (const auto& f : factors_) {
    component.push_back(f->probes());
    total = std::min(total * component.back().size(), kMaxProbes + 1);
  }
  if (total > kMaxProbes) {
    // Diagonal only: the same probe index in every factor.
    std::size_t width = component.front().size();
    for (const auto& c : component) width = std::min(width, c.size());
    for (std::size_t k = 0; k < width; ++k) {
      std::vector<Value> p;
      for (const auto& c : component) p.push_back(c[k]);
      push(Value::tuple(std::move(p)));
    }
    return out;
  }
  std::vector<std::size_t> digit(factors_.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<Value> p;
    for (std::size_t i = 0; i < factors_.size(); ++i) p.push_back(component[i][digit[i]]);
    push(Value::tuple(std::move(p)));
    for (std::size_t i = factors_.size(); i-- > 0;) {
      if (++digit[i] < component[i].size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

Value ProductMeadow::sample(SplitMix64& rng) const {
  std::vector<Value> p;
  for (const auto& f : factors_) p.push_back(f->sample(rng));
  return Value::tuple(std::move(p));
}

Value ProductMeadow::element(std::uint64_t index) const {
  if (!card_ || index >= *card_) throw std::out_of_range("element index out of range");
  std::vector<Value> p;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    p.push_back(factors_[i]->element(index / strides_[i]));
    index %= strides_[i];
  }
  return Value::tuple(std::move(p));
}

std::uint64_t ProductMeadow::index_of(const Value& v) const {
  if (!card_) throw InfiniteCarrierError(descriptor());
  const auto& x = get(v);
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx += factors_[i]->index_of(x[i]) * strides_[i];
  return idx;
}

template <class F>
std::uint64_t ProductMeadow::combine(std::uint64_t a, std::uint64_t b, F&& f) const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out += f(*factors_[i], a / strides_[i], b / strides_[i]) * strides_[i];
    a %= strides_[i];
    b %= strides_[i];
  }
  return out;
}

std::uint64_t ProductMeadow::add_index(std::uint64_t a, std::uint64_t b) const {
  return combine(a, b, [](const Meadow& m, std::uint64_t x, std::uint64_t y) { return m.add_index(x, y); });
}
std::uint64_t ProductMeadow::mul_index(std::uint64_t a, std::uint64_t b) const {
  return combine(a, b, [](const Meadow& m, std::uint64_t x, std::uint64_t y) { return m.mul_index(x, y); });
}
std::uint64_t ProductMeadow::neg_index(std::uint64_t a) const {
  return combine(a, 0, [](const Meadow& m, std::uint64_t x, std::uint64_t) { return m.neg_index(x); });
}
std::uint64_t ProductMeadow::inv_index(std::uint64_t a) const {
  return combine(a, 0, [](const Meadow& m, std::uint64_t x, std::uint64_t) { return m.inv_index(x); });
}

// ---------------------------------------------------------------------------
// Q0(c)

ExtensionMeadow::ExtensionMeadow(Poly minpoly, std::string generator)
    : g_(std::move(minpoly)), gen_name_(std::move(generator)) {
  if (g_.degree() < 1) throw std::invalid_argument("minimal polynomial must have degree >= 1");
  if (g_.lead() != Rational(1)) throw std::invalid_argument("minimal polynomial " + g_.str() + " is not monic");
  if (g_.degree() >= 2 && g_.degree() <= 3) {
    if (auto r = has_rational_root(g_)) throw ReducibleModulusError(g_, Poly({-*r, Rational(1)}));
  } else {
    assumed_irreducible_ = true;
  }
}

const ExtValue& ExtensionMeadow::get(const Value& v) const {
  if (!v.is_ext() || v.ext().coeffs.size() != degree()) foreign(v);
  return v.ext();
}

Value ExtensionMeadow::from_poly(const Poly& p) const {
  const Poly r = divmod(p, g_).remainder;
  ExtValue e;
  e.coeffs.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) e.coeffs[i] = r.coeff(i);
  return e;
}

Poly ExtensionMeadow::to_poly(const Value& v) const { return Poly(get(v).coeffs); }

Value ExtensionMeadow::generator() const { return from_poly(Poly::x()); }

std::string ExtensionMeadow::descriptor() const {
  std::string out = "ext:[" + g_.str("x");
  if (gen_name_ != "c") out += ";" + gen_name_;
  return out + "]";
}

Value ExtensionMeadow::zero() const { return from_poly(Poly()); }
Value ExtensionMeadow::one() const { return from_poly(Poly::constant(1)); }

Value ExtensionMeadow::add(const Value& a, const Value& b) const {
  const auto& x = get(a);
  const auto& y = get(b);
  ExtValue e;
  e.coeffs.reserve(degree());
  for (std::size_t i = 0; i < degree(); ++i) e.coeffs.push_back(x.coeffs[i] + y.coeffs[i]);
  return e;
}

Value ExtensionMeadow::neg(const Value& a) const {
  ExtValue e = get(a);
  for (auto& c : e.coeffs) c = -c;
  return e;
}

Value ExtensionMeadow::mul(const Value& a, const Value& b) const { return from_poly(to_poly(a) * to_poly(b)); }

Value ExtensionMeadow::inv(const Value& a) const { return from_poly(inverse_mod(to_poly(a), g_)); }

bool ExtensionMeadow::contains(const Value& v) const { return v.is_ext() && v.ext().coeffs.size() == degree(); }

Value ExtensionMeadow::from_integer(const BigInt& n) const { return from_poly(Poly::constant(Rational(n))); }

std::string ExtensionMeadow::format(const Value& v) const {
  const auto& e = get(v);
  std::string out = "[";
  for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
    if (i) out += ',';
    out += e.coeffs[i].str();
  }
  return out + "]";
}

Value ExtensionMeadow::parse_value(std::string_view text) const {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw std::invalid_argument("coefficient vector must end with ']'");
    const auto items = split_top(text.substr(1, text.size() - 2), ',');
    if (items.size() > degree()) throw std::invalid_argument("coefficient vector longer than the extension degree");
    std::vector<Rational> c;
    for (auto item : items) c.push_back(Rational::parse(item));
    return from_poly(Poly(std::move(c)));
  }
  // A polynomial expression in the generator, with total inversion.
  Signature sig = Signature::standard().with_constants({gen_name_});
  const Term t = parse_term(text, sig);
  std::function<Value(const Term&)> ev = [&](const Term& u) -> Value {
    if (auto n = u.numeral_value()) return from_integer(BigInt(static_cast<unsigned long>(*n)));
    switch (u.kind()) {
      case TermKind::One: return one();
      case TermKind::Const: return generator();
      case TermKind::Add: return add(ev(u.arg(0)), ev(u.arg(1)));
      case TermKind::Mul: return mul(ev(u.arg(0)), ev(u.arg(1)));
      case TermKind::Neg: return neg(ev(u.arg(0)));
      case TermKind::Inv: return inv(ev(u.arg(0)));
      default: throw std::invalid_argument("unexpected '" + to_string(u) + "' in an element of " + descriptor());
    }
  };
  return ev(t);
}

std::vector<Value> ExtensionMeadow::probes() const {
  std::vector<Value> out;
  for (const auto& r : {Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(2),
                        Rational(-2)}) {
    out.push_back(from_poly(Poly::constant(r)));
  }
  out.push_back(generator());
  out.push_back(neg(generator()));
  out.push_back(add(one(), generator()));
  for (std::size_t k = 2; k < degree(); ++k) out.push_back(from_poly(Poly::monomial(1, k)));
  return out;
}

Value ExtensionMeadow::sample(SplitMix64& rng) const {
  ExtValue e;
  RationalMeadow q;
  for (std::size_t i = 0; i < degree(); ++i) e.coeffs.push_back(q.sample(rng).rational());
  return e;
}

// ---------------------------------------------------------------------------
// Generated subalgebras

GeneratedMeadow::GeneratedMeadow(MeadowPtr parent, std::vector<Value> generators, std::optional<std::uint64_t> limit)
    : parent_(std::move(parent)), gens_(std::move(generators)) {
  if (!parent_->is_finite() && !limit) {
    throw std::invalid_argument("generated subalgebra of infinite " + parent_->descriptor() +
                                " needs a closure bound (limit=N)");
  }
  const std::uint64_t cap = std::min<std::uint64_t>(limit.value_or(kMaxElements), kMaxElements);
  for (const auto& g : gens_) {
    if (!parent_->contains(g)) throw ForeignValueError(parent_->descriptor(), "generator " + std::to_string(&g - gens_.data()));
  }

  struct Pending {
    std::uint32_t a, b, r;
  };
  std::vector<Pending> adds, muls;
  std::vector<std::uint32_t> negs, invs;

  auto intern = [&](const Value& v) -> std::uint32_t {
    auto [it, inserted] = lookup_.emplace(v, static_cast<std::uint32_t>(elements_.size()));
    if (inserted) {
      if (elements_.size() >= cap) {
        throw std::length_error("closure of the generated subalgebra exceeds " + std::to_string(cap) + " elements");
      }
      elements_.push_back(v);
    }
    return it->second;
  };

  intern(parent_->zero());
  one_ = intern(parent_->one());
  for (const auto& g : gens_) intern(g);

  // Semi-naive fixpoint: element i is combined with every j <= i exactly once.
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Value ei = elements_[i];
    negs.push_back(intern(parent_->neg(ei)));
    invs.push_back(intern(parent_->inv(ei)));
    for (std::size_t j = 0; j <= i; ++j) {
      const Value ej = elements_[j];
      const auto ii = static_cast<std::uint32_t>(i), jj = static_cast<std::uint32_t>(j);
      adds.push_back({ii, jj, intern(parent_->add(ei, ej))});
      muls.push_back({ii, jj, intern(parent_->mul(ei, ej))});
      if (i != j) {
        adds.push_back({jj, ii, intern(parent_->add(ej, ei))});
        muls.push_back({jj, ii, intern(parent_->mul(ej, ei))});
      }
    }
  }

  const std::size_t n = elements_.size();
  add_.assign(n * n, 0);
  mul_.assign(n * n, 0);
  for (const auto& p : adds) add_[p.a * n + p.b] = p.r;
  for (const auto& p : muls) mul_[p.a * n + p.b] = p.r;
  neg_ = std::move(negs);
  inv_ = std::move(invs);
}

std::string GeneratedMeadow::descriptor() const {
  std::string out = "gen:[" + parent_->descriptor();
  for (const auto& g : gens_) out += ";" + parent_->format(g);
  return out + "]";
}

bool GeneratedMeadow::contains(const Value& v) const { return lookup_.count(v) > 0; }

std::uint64_t GeneratedMeadow::index_of(const Value& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) {
    if (parent_->contains(v)) throw ForeignValueError(descriptor(), parent_->format(v) + " is outside the subalgebra");
    foreign(v);
  }
  return it->second;
}

Value GeneratedMeadow::parse_value(std::string_view text) const {
  Value v = parent_->parse_value(text);
  index_of(v);
  return v;
}

std::vector<Value> GeneratedMeadow::probes() const {
  const std::size_t k = std::min<std::size_t>(elements_.size(), 16);
  return {elements_.begin(), elements_.begin() + static_cast<std::ptrdiff_t>(k)};
}

std::shared_ptr<const GeneratedMeadow> generated_subalgebra(const MeadowPtr& m, std::vector<Value> gens,
                                                            std::optional<std::uint64_t> limit) {
  return std::make_shared<GeneratedMeadow>(m, std::move(gens), limit);
}

// ---------------------------------------------------------------------------
// Descriptors

MeadowDescriptor MeadowDescriptor::parse(std::string_view text) {
  text = trim(text);
  MeadowDescriptor d;
  auto bracketed = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (text.substr(0, prefix.size()) != prefix) return std::nullopt;
    auto rest = trim(text.substr(prefix.size()));
    if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') {
      throw std::invalid_argument("expected '" + std::string(prefix) + "[...]' in '" + std::string(text) + "'");
    }
    return rest.substr(1, rest.size() - 2);
  };
  if (text == "q0") return d;
  if (text.substr(0, 3) == "zp:") {
    d.kind = Kind::PrimeField0;
    d.modulus = parse_u64(trim(text.substr(3)));
    return d;
  }
  if (text.substr(0, 4) == "zsf:") {
    d.kind = Kind::SquarefreeMod;
    d.modulus = parse_u64(trim(text.substr(4)));
    return d;
  }
  if (auto body = bracketed("prod:")) {
    d.kind = Kind::Product;
    for (auto item : split_top(*body, ',')) d.children.push_back(parse(item));
    return d;
  }
  if (auto body = bracketed("ext:")) {
    d.kind = Kind::Extension;
    auto parts = split_top(*body, ';');
    if (parts.size() > 2) throw std::invalid_argument("ext:[poly] or ext:[poly;name]");
    d.minpoly = std::string(parts[0]);
    if (parts.size() == 2) d.generator = std::string(parts[1]);
    return d;
  }
  if (auto body = bracketed("gen:")) {
    d.kind = Kind::Generated;
    auto parts = split_top(*body, ';');
    d.children.push_back(parse(parts[0]));
    for (std::size_t i = 1; i < parts.size(); ++i) {
      if (parts[i].substr(0, 6) == "limit=") {
        d.limit = parse_u64(parts[i].substr(6));
      } else if (!parts[i].empty()) {
        d.generators.emplace_back(parts[i]);
      }
    }
    return d;
  }
  throw std::invalid_argument("unknown meadow descriptor '" + std::string(text) + "'");
}

std::string MeadowDescriptor::str() const { return make_meadow(*this)->descriptor(); }

MeadowPtr make_meadow(const MeadowDescriptor& d) {
  switch (d.kind) {
    case MeadowDescriptor::Kind::Q0: return std::make_shared<RationalMeadow>();
    case MeadowDescriptor::Kind::PrimeField0: return std::make_shared<ModularMeadow>(d.modulus, true);
    case MeadowDescriptor::Kind::SquarefreeMod: return std::make_shared<ModularMeadow>(d.modulus, false);
    case MeadowDescriptor::Kind::Product: {
      std::vector<MeadowPtr> fs;
      for (const auto& c : d.children) fs.push_back(make_meadow(c));
      return std::make_shared<ProductMeadow>(std::move(fs));
    }
    case MeadowDescriptor::Kind::Extension:
      return std::make_shared<ExtensionMeadow>(parse_poly(d.minpoly, "x"), d.generator);
    case MeadowDescriptor::Kind::Generated: {
      auto parent = make_meadow(d.children.at(0));
      std::vector<Value> gens;
      for (const auto& g : d.generators) gens.push_back(parent->parse_value(g));
      return generated_subalgebra(parent, std::move(gens), d.limit);
    }
  }
  throw std::logic_error("unreachable descriptor kind");
}

MeadowPtr make_meadow(std::string_view descriptor) { return make_meadow(MeadowDescriptor::parse(descriptor)); }

// ---------------------------------------------------------------------------
// CRT

CrtIso::CrtIso(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("CRT isomorphism needs n >= 2");
  ring_ = std::make_shared<ModularMeadow>(n, false);
  std::vector<MeadowPtr> fs;
  for (auto p : ring_->primes()) {
    fs.push_back(std::make_shared<ModularMeadow>(p, true));
    const std::uint64_t m = n / p;
    idempotents_.push_back(mul_mod(m, inverse_mod(m % p, p), n));
  }
  product_ = std::make_shared<ProductMeadow>(std::move(fs));
}

Value CrtIso::to_product(const Value& residue) const {
  const std::uint64_t a = ring_->index_of(residue);
  std::vector<Value> parts;
  for (auto p : ring_->primes()) parts.emplace_back(Residue(p, a % p));
  return Value::tuple(std::move(parts));
}

Value CrtIso::from_product(const Value& tuple) const {
  const auto n = ring_->modulus();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < ring_->primes().size(); ++i) {
    const auto v = product_->factors()[i]->index_of(product_->project(tuple, i));
    acc = ring_->add_index(acc, mul_mod(v, idempotents_[i], n));
  }
  return Residue(n, acc);
}

}  // namespace meadow
