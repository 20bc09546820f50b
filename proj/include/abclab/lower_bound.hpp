#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "abclab/abc_count.hpp"
#include "abclab/bigint.hpp"
#include "abclab/lattice.hpp"

namespace abclab {

// Constructive lower-bound setup: force 2^x | A, 3^y | B, 5^z | C with the
// smallest exponents making every multiple automatically satisfy its radical
// constraint.
struct LowerBoundConfig {
  int x = 0, y = 0, z = 0;  // exponents of 2, 3, 5
  AbcParams params;
};

// The exponent regime where the forced-divisibility construction provably
// finds solutions: min(a,b,c) + max(a,b,c) > 1, decided exactly. Outside it
// the generator still runs and reports whatever the lattice yields.
inline bool within_guaranteed_regime(const AbcParams& p) {
  Rational lo = p.a, hi = p.a;
  for (Rational e : {p.b, p.c}) {
    if (e < lo) lo = e;
    if (hi < e) hi = e;
  }
  // lo + hi > 1  <=>  lo.num * hi.den + hi.num * lo.den > lo.den * hi.den
  return (__int128)lo.num * hi.den + (__int128)hi.num * lo.den > (__int128)lo.den * hi.den;
}

// Smallest x with 2^(x-1) > N^(1-a), and likewise for (3, b) and (5, c);
// the strict inequality is decided exactly as base^((x-1)q) > N^(q-p).
inline LowerBoundConfig choose_exponents(const AbcParams& p) {
  validate_params(p);
  auto minimal = [&](std::uint64_t base, Rational e) {
    std::uint64_t q = static_cast<std::uint64_t>(e.den);
    std::uint64_t qp = static_cast<std::uint64_t>(e.den - e.num);
    int x = 1;
    while (!pow_gt(base, static_cast<std::uint64_t>(x - 1) * q,
                   static_cast<std::uint64_t>(p.n), qp))
      ++x;
    return x;
  };
  LowerBoundConfig cfg;
  cfg.params = p;
  cfg.x = minimal(2, p.a);
  cfg.y = minimal(3, p.b);
  cfg.z = minimal(5, p.c);
  return cfg;
}

// All solutions of the forced shape: coprime points of the (2^x, 3^y, 5^z)
// divisibility lattice inside the N-cube, nonzero in every coordinate. Each
// output is re-checked against the full validity predicate.
inline std::vector<Triple> generate_solutions(const LowerBoundConfig& cfg, const SpfSieve& sieve) {
  const AbcParams& p = cfg.params;
  validate_params(p);
  if (static_cast<std::uint64_t>(p.n) > sieve.limit)
    throw std::out_of_range("generate_solutions: N exceeds sieve limit");
  auto pow_ll = [](long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  };
  Lattice2D lat =
      lattice_from_divisibility(pow_ll(2, cfg.x), pow_ll(3, cfg.y), pow_ll(5, cfg.z));
  Polygon poly(p.n, p.n, p.n);
  std::vector<Triple> out;
  detail::scan_points(lat, poly, [&](Vec2 v, long long, long long) {
    if (v.a == 0 || v.b == 0) return;
    long long c = third_coord(v);
    if (c == 0) return;
    if (std::gcd(v.a < 0 ? -v.a : v.a, v.b < 0 ? -v.b : v.b) != 1) return;
    Triple t{v.a, v.b, c};
    if (!is_valid_triple(t, p, sieve))
      throw std::logic_error("lower bound generator emitted an invalid triple");
    out.push_back(t);
  });
  return out;
}

// Exact partial sum of sum_{n>=1} mu(n) gcd(n, 30) / n^2. Non-squarefree n
// contribute nothing and are skipped, which keeps the denominator small.
inline BigRational moebius_gcd30_sum(long long terms) {
  if (terms < 1) throw std::invalid_argument("moebius_gcd30_sum: need at least one term");
  if (terms > 100000000) throw std::invalid_argument("moebius_gcd30_sum: term budget exceeded");
  std::vector<std::int8_t> mu(static_cast<std::size_t>(terms) + 1, 0);
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(terms) + 1, 0);
  std::vector<std::uint32_t> primes;
  if (terms >= 1) mu[1] = 1;
  for (long long i = 2; i <= terms; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      mu[i] = -1;
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t q : primes) {
      if (q > spf[i] || i * q > terms) break;
      spf[i * q] = q;
      mu[i * q] = q == spf[i] ? 0 : static_cast<std::int8_t>(-mu[i]);
    }
  }
  BigRational s;  // 0/1
  for (long long n = 1; n <= terms; ++n) {
    if (mu[n] == 0) continue;
    std::uint64_t n2 = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    std::uint64_t g = static_cast<std::uint64_t>(std::gcd(n, 30ll));
    bool term_negative = mu[n] < 0;
    BigUint add = s.den;
    add.mul_word(g);
    s.num.mul_word(n2);
    if (s.negative == term_negative || s.num.is_zero()) {
      s.num += add;
      s.negative = term_negative;
    } else if (s.num >= add) {
      s.num -= add;
    } else {
      s.num = add - s.num;
      s.negative = term_negative;
    }
    s.den.mul_word(n2);
  }
  if (s.num.is_zero()) s.negative = false;
  return s;
}

// (V / U) * partial Moebius sum, exact: V = 3N^2 is the polygon area and
// U = 2^x 3^y 5^z the lattice covolume.
inline BigRational predicted_main_term(const LowerBoundConfig& cfg, long long terms) {
  validate_params(cfg.params);
  BigRational s = moebius_gcd30_sum(terms);
  BigUint volume(3);
  volume.mul_word(static_cast<std::uint64_t>(cfg.params.n));
  volume.mul_word(static_cast<std::uint64_t>(cfg.params.n));
  BigUint covolume = BigUint::pow(2, static_cast<std::uint64_t>(cfg.x)) *
                     BigUint::pow(3, static_cast<std::uint64_t>(cfg.y)) *
                     BigUint::pow(5, static_cast<std::uint64_t>(cfg.z));
  BigRational out;
  out.negative = s.negative;
  out.num = s.num * volume;
  out.den = s.den * covolume;
  return out;
}

}  // namespace abclab
