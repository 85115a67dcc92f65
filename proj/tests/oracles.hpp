#ifndef MEADOW_TESTS_ORACLES_HPP
#define MEADOW_TESTS_ORACLES_HPP

// Reference implementations that share no code paths with the library
// beyond the Value type and the meadow operation entry points.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "meadow/meadows.hpp"
#include "meadow/numeric.hpp"
#include "meadow/term.hpp"

namespace oracle {

inline bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> trial_division_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Every y in [0, n) with a*y*a = a and y*a*y = y.
inline std::vector<std::uint64_t> brute_weak_inverses(std::uint64_t a, std::uint64_t n) {
  std::vector<std::uint64_t> out;
  a %= n;
  for (std::uint64_t y = 0; y < n; ++y) {
    if ((a * y % n) * a % n == a && (y * a % n) * y % n == y) out.push_back(y);
  }
  return out;
}

// Elements of Z/nZ with no y such that a*y*a = a.
inline std::vector<std::uint64_t> brute_non_regular(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::uint64_t y = 0; y < n && !found; ++y) found = (a * y % n) * a % n == a;
    if (!found) out.push_back(a);
  }
  return out;
}

inline std::set<std::uint64_t> squares_mod(std::uint64_t p) {
  std::set<std::uint64_t> s;
  for (std::uint64_t x = 1; x < p; ++x) s.insert(x * x % p);
  return s;
}

inline std::uint64_t crt_solve(const std::vector<std::uint64_t>& residues, const std::vector<std::uint64_t>& moduli) {
  std::uint64_t n = 1;
  for (auto m : moduli) n *= m;
  for (std::uint64_t x = 0; x < n; ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < moduli.size() && ok; ++i) ok = x % moduli[i] == residues[i];
    if (ok) return x;
  }
  throw std::logic_error("no CRT solution");
}

// Partition-filter congruence count: every set partition of the carrier
// (restricted growth strings), kept when each operation maps related
// arguments to related results. Operations are applied through the meadow
// itself rather than through precomputed tables.
inline std::vector<std::vector<std::uint32_t>> partition_filter_congruences(
    const meadow::Meadow& m, bool with_eq = false) {
  const std::size_t n = m.size();
  if (n > 7) throw std::length_error("partition oracle is capped at 7 elements");
  std::vector<meadow::Value> el;
  for (std::size_t i = 0; i < n; ++i) el.push_back(m.element(i));
  auto idx = [&](const meadow::Value& v) {
    for (std::size_t i = 0; i < n; ++i) {
      if (el[i] == v) return i;
    }
    throw std::logic_error("value outside carrier");
  };
  std::vector<std::vector<std::size_t>> add(n, std::vector<std::size_t>(n)), mul = add, eqt = add;
  std::vector<std::size_t> neg(n), inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    neg[a] = idx(m.neg(el[a]));
    inv[a] = idx(m.inv(el[a]));
    for (std::size_t b = 0; b < n; ++b) {
      add[a][b] = idx(m.add(el[a], el[b]));
      mul[a][b] = idx(m.mul(el[a], el[b]));
      eqt[a][b] = idx(el[a] == el[b] ? m.one() : m.zero());
    }
  }
  std::vector<std::vector<std::uint32_t>> found;
  std::vector<std::uint32_t> rgs(n, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t max_block) {
    if (i == n) {
      auto same = [&](std::size_t a, std::size_t b) { return rgs[a] == rgs[b]; };
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (!same(a, b)) continue;
          if (!same(neg[a], neg[b]) || !same(inv[a], inv[b])) return;
          for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t d = 0; d < n; ++d) {
              if (!same(c, d)) continue;
              if (!same(add[a][c], add[b][d]) || !same(mul[a][c], mul[b][d])) return;
              if (with_eq && !same(eqt[a][c], eqt[b][d])) return;
            }
          }
        }
      }
      found.push_back(rgs);
      return;
    }
    for (std::uint32_t blk = 0; blk <= max_block + 1; ++blk) {
      rgs[i] = blk;
      rec(i + 1, std::max(max_block, blk));
    }
  };
  if (n == 0) return found;
  rgs[0] = 0;
  rec(1, 0);
  return found;
}

// Q(i) with total inversion: a + b*i, inverse (a - b*i)/(a^2 + b^2).
struct Gaussian {
  meadow::Rational a, b;
  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

inline Gaussian g_add(const Gaussian& x, const Gaussian& y) { return {x.a + y.a, x.b + y.b}; }
inline Gaussian g_neg(const Gaussian& x) { return {-x.a, -x.b}; }
inline Gaussian g_mul(const Gaussian& x, const Gaussian& y) {
  return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
}
inline Gaussian g_inv(const Gaussian& x) {
  const meadow::Rational norm = x.a * x.a + x.b * x.b;
  if (norm.is_zero()) return {0, 0};
  return {x.a / norm, -x.b / norm};
}

inline Gaussian gaussian_eval(const meadow::Term& t, const std::string& i_name) {
  using meadow::TermKind;
  switch (t.kind()) {
    case TermKind::Zero: return {0, 0};
    case TermKind::One: return {1, 0};
    case TermKind::Const:
      if (t.name() != i_name) throw std::invalid_argument("unexpected constant");
      return {0, 1};
    case TermKind::Add: return g_add(gaussian_eval(t.arg(0), i_name), gaussian_eval(t.arg(1), i_name));
    case TermKind::Neg: return g_neg(gaussian_eval(t.arg(0), i_name));
    case TermKind::Mul: return g_mul(gaussian_eval(t.arg(0), i_name), gaussian_eval(t.arg(1), i_name));
    case TermKind::Inv: return g_inv(gaussian_eval(t.arg(0), i_name));
    default: throw std::invalid_argument("gaussian oracle handles closed ring terms only");
  }
}

}  // namespace oracle

#endif  // MEADOW_TESTS_ORACLES_HPP
