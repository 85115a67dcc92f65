#include "meadow/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace meadow {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }
Poly Poly::x() { return Poly({Rational(0), Rational(1)}); }
Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Poly::lead() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Rational inv = lead().inverse();
  return inv * *this;
}

Rational Poly::eval(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::optional<std::vector<std::uint64_t>> Poly::mod_p(std::uint64_t p) const {
  std::vector<std::uint64_t> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    const std::uint64_t d = reduce_mod(c.den(), p);
    if (d == 0) return std::nullopt;
    out.push_back(mul_mod(reduce_mod(c.num(), p), inverse_mod(d, p), p));
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Rational& c, const Poly& a) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& x : v) x = c * x;
  return Poly(std::move(v));
}

Poly Poly::operator-() const { return Rational(-1) * *this; }

std::string Poly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) {
      os << mag.str();
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly r = a;
  const int db = b.degree();
  if (r.degree() < db) return {Poly(), r};
  std::vector<Rational> q(static_cast<std::size_t>(r.degree() - db + 1));
  const Rational lead_inv = b.lead().inverse();
  while (!r.is_zero() && r.degree() >= db) {
    const auto shift = static_cast<std::size_t>(r.degree() - db);
    const Rational c = r.lead() * lead_inv;
    q[shift] = c;
    r = r - Poly::monomial(c, shift) * b;
  }
  return {Poly(std::move(q)), r};
}

ExtGcd poly_ext_gcd(const Poly& p, const Poly& g) {
  if (p.is_zero() && g.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  // Invariant: r_i = s_i * g + t_i * p.
  Poly r0 = g, r1 = p;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const Rational norm = r0.lead().inverse();
  return {norm * r0, norm * s0, norm * t0};
}

ReducibleModulusError::ReducibleModulusError(Poly modulus, Poly factor)
    : std::domain_error("minimal polynomial " + modulus.str() + " is reducible: it has the factor " + factor.str()),
      modulus_(std::move(modulus)),
      factor_(std::move(factor)) {}

Poly inverse_mod(const Poly& a, const Poly& g) {
  const Poly reduced = divmod(a, g).remainder;
  if (reduced.is_zero()) return Poly();
  auto [d, h, h_prime] = poly_ext_gcd(reduced, g);
  if (d.degree() > 0) throw ReducibleModulusError(g, d);
  return divmod(h_prime, g).remainder;
}

namespace {

BigInt lcm_of_denominators(const Poly& f) {
  BigInt l = 1;
  for (const auto& c : f.coeffs()) {
    BigInt d = c.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
  BigInt m = abs(n);
  if (!m.fits_ulong_p()) throw std::invalid_argument("coefficient too large for rational-root search");
  const auto factors = factorize(m.get_ui());
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= static_cast<unsigned long>(p);
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::optional<Rational> has_rational_root(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("the zero polynomial has every rational as a root");
  std::set<Rational> roots;
  std::size_t low = 0;
  while (f.coeffs()[low].is_zero()) ++low;
  if (low > 0) roots.insert(Rational(0));
  // Integer polynomial with nonzero constant term.
  const BigInt scale = lcm_of_denominators(f);
  std::vector<BigInt> ints;
  for (std::size_t i = low; i < f.coeffs().size(); ++i) ints.push_back((f.coeffs()[i] * Rational(scale)).num());
  if (ints.size() > 1) {
    const Poly g([&] {
      std::vector<Rational> v;
      for (const auto& c : ints) v.emplace_back(c);
      return v;
    }());
    for (const auto& d : positive_divisors(ints.front())) {
      for (const auto& e : positive_divisors(ints.back())) {
        for (int sign : {1, -1}) {
          const Rational cand(BigInt(sign * d), e);
          if (g.eval(cand).is_zero()) roots.insert(cand);
        }
      }
    }
  }
  if (roots.empty()) return std::nullopt;
  return *roots.begin();
}

namespace {
std::uint64_t horner_mod(const std::vector<std::uint64_t>& c, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = mul_mod(acc, x, p) + *it;
    if (acc >= p) acc -= p;
  }
  return acc;
}

std::vector<std::uint64_t> coefficients_mod(const Poly& f, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  auto c = f.mod_p(p);
  if (!c) throw std::invalid_argument("polynomial " + f.str() + " has a denominator divisible by " + std::to_string(p));
  return *c;
}
}  // namespace

std::vector<std::uint64_t> roots_mod_p(const Poly& f, std::uint64_t p) {
  const auto c = coefficients_mod(f, p);
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < p; ++x) {
    if (horner_mod(c, x, p) == 0) out.push_back(x);
  }
  return out;
}

std::optional<std::uint64_t> first_root_mod_p(const Poly& f, std::uint64_t p) {
  const auto c = coefficients_mod(f, p);
  for (std::uint64_t x = 0; x < p; ++x) {
    if (horner_mod(c, x, p) == 0) return x;
  }
  return std::nullopt;
}

Poly term_to_poly(const Term& t, const std::string& var) {
  if (auto n = t.numeral_value()) return Poly::constant(Rational(static_cast<long>(*n)));
  switch (t.kind()) {
    case TermKind::Zero: return Poly();
    case TermKind::One: return Poly::constant(1);
    case TermKind::Var:
    case TermKind::Const:
      if (t.name() != var) throw std::invalid_argument("unexpected symbol '" + t.name() + "' in polynomial over " + var);
      return Poly::x();
    case TermKind::Add: return term_to_poly(t.arg(0), var) + term_to_poly(t.arg(1), var);
    case TermKind::Mul: return term_to_poly(t.arg(0), var) * term_to_poly(t.arg(1), var);
    case TermKind::Neg: return -term_to_poly(t.arg(0), var);
    case TermKind::Inv: {
      const Poly inner = term_to_poly(t.arg(0), var);
      if (inner.degree() > 0) throw std::invalid_argument("inverse of a non-constant in polynomial: " + to_string(t));
      return Poly::constant(inner.coeff(0).inverse());
    }
    case TermKind::App: break;
  }
  throw std::invalid_argument("function symbol '" + t.name() + "' in polynomial");
}

Poly parse_poly(std::string_view text, const std::string& var) { return term_to_poly(parse_term(text), var); }

}  // namespace meadow
