#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "abclab/arith.hpp"

namespace abclab {

using int128 = __int128;

// Plane point (A, B); the third coordinate C = -(A+B) is implicit, and all
// lengths are measured with the 3D Euclidean norm of (A, B, -A-B). Determinants
// stay in plain (A, B) coordinates so a divisibility lattice built from
// (alpha, beta, gamma) has covolume exactly alpha*beta*gamma.
struct Vec2 {
  long long a = 0;
  long long b = 0;
};

inline bool operator==(Vec2 x, Vec2 y) { return x.a == y.a && x.b == y.b; }
inline Vec2 operator-(Vec2 x, Vec2 y) { return {x.a - y.a, x.b - y.b}; }
inline long long third_coord(Vec2 v) { return -(v.a + v.b); }

inline int128 norm2(Vec2 v) {
  int128 a = v.a, b = v.b;
  return a * a + b * b + (a + b) * (a + b);
}

inline int128 cross(Vec2 u, Vec2 v) { return (int128)u.a * v.b - (int128)u.b * v.a; }

// Inner product matching norm2.
inline int128 plane_dot(Vec2 u, Vec2 v) {
  return (int128)u.a * v.a + (int128)u.b * v.b + ((int128)u.a + u.b) * ((int128)v.a + v.b);
}

namespace detail {

inline int128 floor_div(int128 a, int128 b) {  // b > 0
  int128 q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline int128 ceil_div(int128 a, int128 b) {  // b > 0
  int128 q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

inline long long mod_inverse(long long a, long long m) {  // gcd(a, m) = 1, m >= 1
  long long old_r = a % m, r = m;
  long long old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  long long inv = old_s % m;
  return inv < 0 ? inv + m : inv;
}

}  // namespace detail

struct Lattice2D {
  Vec2 b1, b2;
  // Set when the lattice came from divisibility constraints alpha|A, beta|B,
  // gamma|(A+B); needed by the Moebius machinery.
  std::optional<std::array<long long, 3>> divisors;

  int128 det() const { return cross(b1, b2); }
  int128 covolume() const {
    int128 d = det();
    return d < 0 ? -d : d;
  }

  bool contains(Vec2 v) const {
    int128 d = det();
    return cross(v, b2) % d == 0 && cross(b1, v) % d == 0;
  }
};

namespace detail {

// Basis of {(A, B) : a1|A, b1|B, gamma|(A+B)} for arbitrary positive a1, b1
// with gcd(a1, gamma) | b1. Writing A = a1*s, B = b1*t, the congruence
// a1*s + b1*t = 0 (mod gamma) has solution lattice spanned by
// (gamma/g, 0) and (s0, 1) in (s, t) space, where g = gcd(a1, gamma).
inline Lattice2D congruence_lattice(long long a1, long long b1, long long gamma) {
  long long g = std::gcd(a1, gamma);
  if (b1 % g != 0) throw std::invalid_argument("congruence lattice: unsolvable constraint");
  long long gp = gamma / g;
  long long s0 = 0;
  if (gp > 1) {
    long long ar = (a1 / g) % gp;
    long long br = (b1 / g) % gp;
    long long inv = mod_inverse(ar, gp);
    s0 = static_cast<long long>((int128)((gp - br) % gp) * inv % gp);
  }
  Lattice2D lat;
  lat.b1 = {a1 * gp, 0};
  lat.b2 = {a1 * s0, b1};
  return lat;
}

}  // namespace detail

inline Lattice2D lattice_from_divisibility(long long alpha, long long beta, long long gamma) {
  if (alpha < 1 || beta < 1 || gamma < 1)
    throw std::invalid_argument("divisibility lattice: divisors must be positive");
  if (std::gcd(alpha, beta) != 1 || std::gcd(alpha, gamma) != 1 || std::gcd(beta, gamma) != 1)
    throw std::invalid_argument("divisibility lattice: divisors must be pairwise coprime");
  Lattice2D lat = detail::congruence_lattice(alpha, beta, gamma);
  lat.divisors = {{alpha, beta, gamma}};
  return lat;
}

// The sublattice of points with both coordinates (hence all three) divisible
// by n. Only defined for divisibility lattices.
inline Lattice2D sublattice_divisible(const Lattice2D& lat, long long n) {
  if (!lat.divisors) throw std::invalid_argument("sublattice: lattice has no divisor structure");
  if (n < 1) throw std::invalid_argument("sublattice: n must be positive");
  auto [alpha, beta, gamma] = *lat.divisors;
  return detail::congruence_lattice(std::lcm(alpha, n), std::lcm(beta, n), gamma);
}

// Lagrange-Gauss reduction: afterwards |b1| <= |b2| <= |b2 +- b1|, so b1 and
// b2 attain the two successive minima. Swaps only on strict inequality, so
// equal-norm inputs keep their order.
inline Lattice2D reduce_basis(Lattice2D lat) {
  if (lat.det() == 0) throw std::invalid_argument("reduce_basis: degenerate basis");
  for (;;) {
    if (norm2(lat.b1) > norm2(lat.b2)) std::swap(lat.b1, lat.b2);
    int128 num = plane_dot(lat.b1, lat.b2);
    int128 den = norm2(lat.b1);
    // nearest integer to num/den, half-way ties toward zero so an already
    // reduced basis passes through untouched
    int128 t = detail::floor_div(num, den);
    int128 twice_rem = 2 * (num - t * den);
    if (twice_rem > den || (twice_rem == den && t < 0)) ++t;
    if (t == 0) break;
    lat.b2.a -= static_cast<long long>(t) * lat.b1.a;
    lat.b2.b -= static_cast<long long>(t) * lat.b1.b;
  }
  return lat;
}

// Closed hexagon {|A| <= na, |B| <= nb, |A+B| <= nc}; convex and centrally
// symmetric, with integer vertices.
struct Polygon {
  long long na = 0, nb = 0, nc = 0;

  Polygon(long long a, long long b, long long c) : na(a), nb(b), nc(c) {
    if (na < 1 || nb < 1 || nc < 1)
      throw std::invalid_argument("polygon: bounds must be positive");
  }

  bool contains(Vec2 v) const {
    return v.a >= -na && v.a <= na && v.b >= -nb && v.b <= nb &&
           v.a + v.b >= -nc && v.a + v.b <= nc;
  }

  // Counter-clockwise vertex list. The square is clipped by the two lines
  // A + B = +-nc; crossings land on axis-parallel edges, so vertices stay
  // integral.
  std::vector<Vec2> vertices() const {
    std::vector<Vec2> poly = {{na, -nb}, {na, nb}, {-na, nb}, {-na, -nb}};
    auto clip = [&](long long sign) {  // keep sign*(A+B) <= nc
      std::vector<Vec2> out;
      auto inside = [&](Vec2 v) { return sign * (v.a + v.b) <= nc; };
      auto crossing = [&](Vec2 p, Vec2 q) -> Vec2 {
        long long s = sign * nc;  // on the line A + B = s
        if (p.a == q.a) return {p.a, s - p.a};
        return {s - p.b, p.b};
      };
      for (std::size_t i = 0; i < poly.size(); ++i) {
        Vec2 cur = poly[i], nxt = poly[(i + 1) % poly.size()];
        if (inside(cur)) {
          out.push_back(cur);
          if (!inside(nxt)) out.push_back(crossing(cur, nxt));
        } else if (inside(nxt)) {
          out.push_back(crossing(cur, nxt));
        }
      }
      poly = std::move(out);
    };
    clip(1);
    clip(-1);
    return poly;
  }

  int128 area2() const {  // doubled area, exact
    auto vs = vertices();
    int128 sum = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) sum += cross(vs[i], vs[(i + 1) % vs.size()]);
    return sum < 0 ? -sum : sum;
  }

  double perimeter() const {  // in the plane metric, i.e. 3D edge lengths
    auto vs = vertices();
    double sum = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
      sum += std::sqrt(static_cast<double>(norm2(vs[(i + 1) % vs.size()] - vs[i])));
    return sum;
  }

  int128 circumradius2() const {
    auto vs = vertices();
    int128 best = 0;
    for (Vec2 v : vs) best = std::max(best, norm2(v));
    return best;
  }
};

namespace detail {

// Integer t-range of {t : reduced point s*b1 + t*b2 lies in poly} for fixed s.
// Returns false when empty.
inline bool t_interval(const Lattice2D& lat, const Polygon& poly, long long s,
                       int128& lo, int128& hi) {
  lo = std::numeric_limits<long long>::min();
  hi = std::numeric_limits<long long>::max();
  bool empty = false;
  auto clamp = [&](int128 coef, int128 base, int128 bound) {  // |base + coef*t| <= bound
    if (coef == 0) {
      if (base > bound || base < -bound) empty = true;
      return;
    }
    if (coef < 0) {
      coef = -coef;
      base = -base;
    }
    lo = std::max(lo, ceil_div(-bound - base, coef));
    hi = std::min(hi, floor_div(bound - base, coef));
  };
  clamp(lat.b2.a, (int128)s * lat.b1.a, poly.na);
  clamp(lat.b2.b, (int128)s * lat.b1.b, poly.nb);
  clamp((int128)lat.b2.a + lat.b2.b, (int128)s * (lat.b1.a + lat.b1.b), poly.nc);
  return !empty && lo <= hi;
}

inline long long coeff_radius(const Lattice2D& reduced, const Polygon& poly) {
  int128 num = (int128)poly.na * (reduced.b2.b < 0 ? -reduced.b2.b : reduced.b2.b) +
               (int128)poly.nb * (reduced.b2.a < 0 ? -reduced.b2.a : reduced.b2.a);
  return static_cast<long long>(num / reduced.covolume());
}

// Visits every lattice point of lat inside poly exactly once, in a
// deterministic order; fn(point, s, t) with point = s*b1 + t*b2 over the
// reduced basis.
template <class Fn>
inline void scan_points(const Lattice2D& lat, const Polygon& poly, Fn&& fn) {
  Lattice2D red = reduce_basis(lat);
  long long s_hi = coeff_radius(red, poly);
  for (long long s = -s_hi; s <= s_hi; ++s) {
    int128 lo, hi;
    if (!t_interval(red, poly, s, lo, hi)) continue;
    for (int128 t = lo; t <= hi; ++t) {
      Vec2 v{static_cast<long long>(s * (int128)red.b1.a + t * red.b2.a),
             static_cast<long long>(s * (int128)red.b1.b + t * red.b2.b)};
      fn(v, s, static_cast<long long>(t));
    }
  }
}

}  // namespace detail

inline std::vector<Vec2> enumerate_points(const Lattice2D& lat, const Polygon& poly) {
  std::vector<Vec2> out;
  detail::scan_points(lat, poly, [&](Vec2 v, long long, long long) { out.push_back(v); });
  return out;
}

inline long long count_points(const Lattice2D& lat, const Polygon& poly) {
  Lattice2D red = reduce_basis(lat);
  long long s_hi = detail::coeff_radius(red, poly);
  long long count = 0;
  for (long long s = -s_hi; s <= s_hi; ++s) {
    int128 lo, hi;
    if (detail::t_interval(red, poly, s, lo, hi)) count += static_cast<long long>(hi - lo + 1);
  }
  return count;
}

// Points that are not integer multiples of other lattice points. In basis
// coordinates v = s*b1 + t*b2, v/k is a lattice point iff k divides both s
// and t, so primitivity is gcd(s, t) = 1 (the origin drops out).
inline long long count_primitive(const Lattice2D& lat, const Polygon& poly) {
  long long count = 0;
  detail::scan_points(lat, poly, [&](Vec2, long long s, long long t) {
    if (std::gcd(s < 0 ? -s : s, t < 0 ? -t : t) == 1) ++count;
  });
  return count;
}

// Exact count of points in lat (a divisibility lattice) inside poly with
// gcd(A, B) = 1, via sum over squarefree n of mu(n) * |{nonzero points of L_n}|.
// Every nonzero point of L_n has squared length >= 2n^2, so n stops at the
// polygon circumradius; in between, an L_n whose shortest vector already
// exceeds the circumradius contributes nothing and is skipped unenumerated.
inline long long coprime_count_moebius(const Lattice2D& lat, const Polygon& poly,
                                       const SpfSieve& sieve) {
  if (!lat.divisors)
    throw std::invalid_argument("coprime_count_moebius: lattice has no divisor structure");
  int128 circ2 = poly.circumradius2();
  long long total = 0;
  for (long long n = 1; 2 * (int128)n * n <= circ2; ++n) {
    int mu = moebius(static_cast<std::uint64_t>(n), sieve);
    if (mu == 0) continue;
    Lattice2D ln = n == 1 ? lat : sublattice_divisible(lat, n);
    Lattice2D red = reduce_basis(ln);
    if (norm2(red.b1) > circ2) continue;
    total += mu * (count_points(red, poly) - 1);
  }
  return total;
}

// Volume/Covolume main term (exact rational) with the Perimeter/m + 1 error
// scale; the exact count is attached whenever the scan is affordable.
struct CountEstimate {
  long long main_num = 0;
  long long main_den = 1;
  double error_bound = 0;
  std::optional<long long> exact;

  double main_term() const { return static_cast<double>(main_num) / static_cast<double>(main_den); }
};

inline CountEstimate estimate_count(const Lattice2D& lat, const Polygon& poly) {
  Lattice2D red = reduce_basis(lat);
  int128 num = poly.area2();
  int128 den = 2 * red.covolume();
  auto gcd128 = [](int128 x, int128 y) {
    while (y != 0) {
      int128 r = x % y;
      x = y;
      y = r;
    }
    return x < 0 ? -x : x;
  };
  int128 common = gcd128(num, den);
  if (common > 1) {
    num /= common;
    den /= common;
  }
  constexpr int128 kMax = std::numeric_limits<long long>::max();
  if (num > kMax || den > kMax)
    throw std::overflow_error("estimate_count: main term exceeds 64-bit range");
  CountEstimate est;
  est.main_num = static_cast<long long>(num);
  est.main_den = static_cast<long long>(den);
  double m = std::sqrt(static_cast<double>(norm2(red.b1)));
  est.error_bound = poly.perimeter() / m + 1.0;
  double predicted = est.main_term() + 2.0 * static_cast<double>(detail::coeff_radius(red, poly)) + 2.0;
  if (predicted <= 2e7) est.exact = count_points(red, poly);
  return est;
}

}  // namespace abclab
