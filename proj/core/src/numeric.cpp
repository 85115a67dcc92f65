#include "meadow/numeric.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace meadow {

using u128 = unsigned __int128;

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto to_big = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_int(text)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return Rational(to_big(text));
  }
  auto num = trim(text.substr(0, slash));
  auto den = trim(text.substr(slash + 1));
  if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  return Rational(to_big(num), to_big(den));
}

Rational Rational::inverse() const {
  if (is_zero()) return Rational();
  return Rational(mpq_class(1 / q_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational");
  return Rational(mpq_class(a.q_ / b.q_));
}

std::uint64_t reduce_mod(const BigInt& a, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  BigInt r;
  BigInt m;
  mpz_import(m.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

Residue Residue::from(const BigInt& a, std::uint64_t n) { return Residue(n, reduce_mod(a, n)); }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  if (n == 1) return 0;
  std::uint64_t result = 1;
  base %= n;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n) {
  // Extended Euclid on signed 128-bit to avoid overflow of the cofactors.
  __int128 r0 = n, r1 = a % n;
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 != 1) throw std::domain_error("element is not a unit modulo " + std::to_string(n));
  if (t0 < 0) t0 += n;
  return static_cast<std::uint64_t>(t0);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kSmall) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven deterministic set below 3.3e24.
  for (auto a : kSmall) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i <= hi; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  return out;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void split(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const std::uint64_t d = pollard_rho(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cannot factorize 0");
  std::map<std::uint64_t, unsigned> acc;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++acc[p];
      n /= p;
    }
  }
  split(n, acc);
  std::vector<PrimePower> out;
  out.reserve(acc.size());
  for (const auto& [p, e] : acc) out.push_back({p, e});
  return out;
}

SquarefreeResult is_squarefree(std::uint64_t n) {
  auto factors = factorize(n);
  const bool sf = std::all_of(factors.begin(), factors.end(),
                              [](const PrimePower& pp) { return pp.exponent == 1; });
  return {sf, std::move(factors)};
}

int legendre(const BigInt& a, std::uint64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("legendre symbol needs an odd prime, got " + std::to_string(p));
  }
  const std::uint64_t r = reduce_mod(a, p);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

NotSquarefreeError::NotSquarefreeError(std::uint64_t modulus, std::uint64_t witness)
    : std::invalid_argument("Z/" + std::to_string(modulus) + "Z is not a meadow: " +
                            std::to_string(witness) + " has no weak inverse"),
      modulus_(modulus),
      witness_(witness) {}

std::uint64_t weak_inverse_mod(std::uint64_t a, std::uint64_t n,
                               const std::vector<std::uint64_t>& primes) {
  if (n == 1) return 0;
  a %= n;
  std::uint64_t y = 0;
  for (auto q : primes) {
    const std::uint64_t aq = a % q;
    if (aq == 0) continue;
    const std::uint64_t yq = inverse_mod(aq, q);
    const std::uint64_t m = n / q;
    const std::uint64_t basis = mul_mod(m, inverse_mod(m % q, q), n);
    y = static_cast<std::uint64_t>((static_cast<u128>(y) + mul_mod(yq, basis, n)) % n);
  }
  return y;
}

Residue weak_inverse_mod(const BigInt& a, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  const auto sf = is_squarefree(n);
  if (!sf.squarefree) throw NotSquarefreeError(n, *non_regular_witness(n));
  std::vector<std::uint64_t> primes;
  for (const auto& pp : sf.factors) primes.push_back(pp.prime);
  return Residue(n, weak_inverse_mod(reduce_mod(a, n), n, primes));
}

std::optional<std::uint64_t> non_regular_witness(std::uint64_t n) {
  // a is regular iff on every prime-power component it is a unit or zero;
  // the least offender is the least prime whose square divides n.
  for (const auto& pp : factorize(n)) {
    if (pp.exponent >= 2) return pp.prime;
  }
  return std::nullopt;
}

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw std::invalid_argument("expected a non-negative 64-bit integer, got '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace meadow
