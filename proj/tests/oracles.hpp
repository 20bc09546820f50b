#pragma once

// Brute-force reference implementations used by the tests. Everything here
// is deliberately naive and independent of the library's production paths:
// trial division instead of the sieve, full grid scans instead of basis
// enumeration, u128 power ladders instead of big integers.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "abclab/abc_count.hpp"
#include "abclab/conic.hpp"
#include "abclab/lattice.hpp"

namespace oracle {

inline std::vector<std::pair<std::uint64_t, std::uint32_t>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::uint32_t k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime_td(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline std::uint64_t radical_td(std::uint64_t n) {
  std::uint64_t r = 1;
  for (auto [p, k] : trial_factor(n)) r *= p;
  return r;
}

// Radical table without a smallest-prime-factor array: multiplicative
// accumulation over primes found on the fly.
inline std::vector<std::uint64_t> radical_table_scan(std::uint64_t n) {
  std::vector<std::uint64_t> rad(n + 1, 1);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (rad[i] != 1) continue;  // some smaller prime already divided i
    for (std::uint64_t m = i; m <= n; m += i) rad[m] *= i;
  }
  return rad;
}

// Ordered factorizations into three positive parts, by divisor enumeration.
inline std::uint64_t d3_brute(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t d1 = 1; d1 <= n; ++d1) {
    if (n % d1 != 0) continue;
    std::uint64_t m = n / d1;
    for (std::uint64_t d2 = 1; d2 <= m; ++d2)
      if (m % d2 == 0) ++count;
  }
  return count;
}

// Exact a^ea <= b^eb for ranges where both powers fit in u128.
inline bool pow_leq_u128(std::uint64_t a, std::uint64_t ea, std::uint64_t b, std::uint64_t eb) {
  unsigned __int128 pa = 1, pb = 1;
  for (std::uint64_t i = 0; i < ea; ++i) pa *= a;
  for (std::uint64_t i = 0; i < eb; ++i) pb *= b;
  return pa <= pb;
}

inline bool valid_triple_brute(long long A, long long B, long long C, const abclab::AbcParams& p) {
  if (A == 0 || B == 0 || C == 0 || A + B + C != 0) return false;
  auto mag = [](long long v) { return static_cast<std::uint64_t>(v < 0 ? -v : v); };
  std::uint64_t ma = mag(A), mb = mag(B), mc = mag(C);
  std::uint64_t nmax = static_cast<std::uint64_t>(p.n);
  if (ma > nmax || mb > nmax || mc > nmax) return false;
  if (std::gcd(std::gcd(ma, mb), mc) != 1) return false;
  auto holds = [&](std::uint64_t m, abclab::Rational e) {
    return pow_leq_u128(radical_td(m), static_cast<std::uint64_t>(e.den), m,
                        static_cast<std::uint64_t>(e.num));
  };
  return holds(ma, p.a) && holds(mb, p.b) && holds(mc, p.c);
}

// Full scan over ordered pairs (A, B); C is forced.
inline std::uint64_t abc_count_brute(const abclab::AbcParams& p) {
  std::uint64_t count = 0;
  for (long long A = -p.n; A <= p.n; ++A)
    for (long long B = -p.n; B <= p.n; ++B)
      if (valid_triple_brute(A, B, -(A + B), p)) ++count;
  return count;
}

// Grid scan of the divisibility lattice {alpha|A, beta|B, gamma|(A+B)}.
inline std::vector<abclab::Vec2> divisibility_points_brute(long long alpha, long long beta,
                                                           long long gamma,
                                                           const abclab::Polygon& poly,
                                                           bool coprime_only) {
  std::vector<abclab::Vec2> out;
  for (long long a = -(poly.na / alpha) * alpha; a <= poly.na; a += alpha) {
    for (long long b = -(poly.nb / beta) * beta; b <= poly.nb; b += beta) {
      long long s = a + b;
      if (s > poly.nc || s < -poly.nc || s % gamma != 0) continue;
      if (coprime_only && std::gcd(a < 0 ? -a : a, b < 0 ? -b : b) != 1) continue;
      out.push_back({a, b});
    }
  }
  return out;
}

// Membership in a basis lattice, by solving the 2x2 system directly.
inline bool in_lattice_brute(abclab::Vec2 v, abclab::Vec2 b1, abclab::Vec2 b2) {
  __int128 det = (__int128)b1.a * b2.b - (__int128)b1.b * b2.a;
  __int128 sn = (__int128)v.a * b2.b - (__int128)v.b * b2.a;
  __int128 tn = (__int128)b1.a * v.b - (__int128)b1.b * v.a;
  return det != 0 && sn % det == 0 && tn % det == 0;
}

// Successive minima by exhaustive coefficient search; radius chosen by the
// caller large enough to cover both minima.
inline std::pair<__int128, __int128> minima_brute(abclab::Vec2 b1, abclab::Vec2 b2,
                                                  long long coeff_radius) {
  __int128 m1 = -1, m2 = -1;
  abclab::Vec2 best{0, 0};
  for (long long s = -coeff_radius; s <= coeff_radius; ++s) {
    for (long long t = -coeff_radius; t <= coeff_radius; ++t) {
      if (s == 0 && t == 0) continue;
      abclab::Vec2 v{s * b1.a + t * b2.a, s * b1.b + t * b2.b};
      __int128 n2 = abclab::norm2(v);
      if (m1 < 0 || n2 < m1) {
        m1 = n2;
        best = v;
      }
    }
  }
  for (long long s = -coeff_radius; s <= coeff_radius; ++s) {
    for (long long t = -coeff_radius; t <= coeff_radius; ++t) {
      if (s == 0 && t == 0) continue;
      abclab::Vec2 v{s * b1.a + t * b2.a, s * b1.b + t * b2.b};
      if (abclab::cross(v, best) == 0) continue;
      __int128 n2 = abclab::norm2(v);
      if (m2 < 0 || n2 < m2) m2 = n2;
    }
  }
  return {m1, m2};
}

// Primitive points of the divisibility lattice in the polygon: point / k must
// leave the lattice for every k >= 2, checked against the divisibility
// constraints directly.
inline long long primitive_count_brute(long long alpha, long long beta, long long gamma,
                                       const abclab::Polygon& poly) {
  auto pts = divisibility_points_brute(alpha, beta, gamma, poly, false);
  long long count = 0;
  for (abclab::Vec2 v : pts) {
    if (v.a == 0 && v.b == 0) continue;
    bool primitive = true;
    long long g = std::gcd(v.a < 0 ? -v.a : v.a, v.b < 0 ? -v.b : v.b);
    for (long long k = 2; k <= g && primitive; ++k) {
      if (g % k != 0) continue;
      long long a = v.a / k, b = v.b / k;
      if (a % alpha == 0 && b % beta == 0 && (a + b) % gamma == 0) primitive = false;
    }
    if (primitive) ++count;
  }
  return count;
}

// Full triple loop over the conic box.
inline std::vector<abclab::ConicPoint> conic_points_brute(const abclab::ConicInstance& inst) {
  std::vector<abclab::ConicPoint> out;
  for (long long x = -inst.r1; x <= inst.r1; ++x)
    for (long long y = -inst.r2; y <= inst.r2; ++y)
      for (long long z = -inst.r3; z <= inst.r3; ++z) {
        __int128 q = (__int128)inst.alpha * x * x + (__int128)inst.beta * y * y +
                     (__int128)inst.gamma * z * z;
        if (q != 0) continue;
        if (std::gcd(std::gcd(x < 0 ? -x : x, y < 0 ? -y : y), z < 0 ? -z : z) != 1) continue;
        out.push_back({x, y, z});
      }
  return out;
}

}  // namespace oracle
