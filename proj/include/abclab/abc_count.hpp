#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "abclab/arith.hpp"
#include "abclab/bigint.hpp"
#include "abclab/rational.hpp"

namespace abclab {

// Problem parameters: exponents a, b, c in (0, 1] and the magnitude bound N.
struct AbcParams {
  Rational a, b, c;
  long long n = 1;
};

inline void validate_params(const AbcParams& p) {
  for (Rational e : {p.a, p.b, p.c})
    if (e.num < 1 || e.num > e.den)
      throw std::invalid_argument("abc params: exponents must lie in (0, 1]");
  if (p.n < 1) throw std::invalid_argument("abc params: N must be positive");
}

// Ordered signed solution candidate; all entries nonzero, A + B + C = 0.
struct Triple {
  long long A = 0, B = 0, C = 0;
};

inline bool operator==(const Triple& s, const Triple& t) {
  return s.A == t.A && s.B == t.B && s.C == t.C;
}

// floor(log2 x): index of the half-open dyadic interval [2^k, 2^(k+1))
// containing x.
inline int dyadic_key(unsigned long long x) {
  if (x == 0) throw std::invalid_argument("dyadic_key: x must be positive");
  return static_cast<int>(std::bit_width(x)) - 1;
}

// r(x) <= x^(p/q), decided exactly as r^q <= x^p.
inline bool radical_constraint_holds(std::uint64_t magnitude, std::uint64_t rad, Rational e) {
  if (e.num == e.den) return true;  // rad divides magnitude
  return pow_leq(rad, static_cast<std::uint64_t>(e.den), magnitude,
                 static_cast<std::uint64_t>(e.num));
}

inline bool is_valid_triple(const Triple& t, const AbcParams& p, const SpfSieve& sieve) {
  if (t.A == 0 || t.B == 0 || t.C == 0) return false;
  if (t.A + t.B + t.C != 0) return false;
  std::uint64_t ma = abs_u64(t.A), mb = abs_u64(t.B), mc = abs_u64(t.C);
  if (ma > sieve.limit || mb > sieve.limit || mc > sieve.limit)
    throw std::out_of_range("is_valid_triple: magnitude exceeds sieve limit");
  std::uint64_t nmax = static_cast<std::uint64_t>(p.n);
  if (ma > nmax || mb > nmax || mc > nmax) return false;
  if (std::gcd(std::gcd(ma, mb), mc) != 1) return false;
  return radical_constraint_holds(ma, radical(ma, sieve), p.a) &&
         radical_constraint_holds(mb, radical(mb, sieve), p.b) &&
         radical_constraint_holds(mc, radical(mc, sieve), p.c);
}

namespace detail {

inline std::vector<std::uint32_t> radical_table(long long n, const SpfSieve& sieve) {
  std::vector<std::uint32_t> rad(static_cast<std::size_t>(n) + 1, 1);
  for (long long x = 2; x <= n; ++x)
    rad[x] = static_cast<std::uint32_t>(radical(static_cast<std::uint64_t>(x), sieve));
  return rad;
}

inline std::vector<std::uint8_t> constraint_table(long long n, Rational e,
                                                  const std::vector<std::uint32_t>& rad) {
  std::vector<std::uint8_t> ok(static_cast<std::size_t>(n) + 1, 0);
  if (e.num == e.den) {
    std::fill(ok.begin() + 1, ok.end(), 1);
    return ok;
  }
  for (long long x = 1; x <= n; ++x)
    ok[x] = radical_constraint_holds(static_cast<std::uint64_t>(x), rad[x], e) ? 1 : 0;
  return ok;
}

// ok-bitmask per magnitude: bit 0 = passes exponent a, bit 1 = b, bit 2 = c.
inline std::vector<std::uint8_t> ok_bits(const AbcParams& p, const SpfSieve& sieve) {
  auto rad = radical_table(p.n, sieve);
  auto okA = constraint_table(p.n, p.a, rad);
  auto okB = p.b == p.a ? okA : constraint_table(p.n, p.b, rad);
  auto okC = p.c == p.a ? okA : (p.c == p.b ? okB : constraint_table(p.n, p.c, rad));
  std::vector<std::uint8_t> bits(okA.size(), 0);
  for (std::size_t x = 1; x < bits.size(); ++x)
    bits[x] = static_cast<std::uint8_t>(okA[x] | (okB[x] << 1) | (okC[x] << 2));
  return bits;
}

// Valid position assignments of three distinct magnitudes with ok-bitmasks
// (bx, by, bz) onto positions (a, b, c): all 6 bijections.
inline int perm_count6(int bx, int by, int bz) {
  auto A = [](int m) { return m & 1; };
  auto B = [](int m) { return (m >> 1) & 1; };
  auto C = [](int m) { return (m >> 2) & 1; };
  return (A(bx) & B(by) & C(bz)) + (A(bx) & B(bz) & C(by)) + (A(by) & B(bx) & C(bz)) +
         (A(by) & B(bz) & C(bx)) + (A(bz) & B(bx) & C(by)) + (A(bz) & B(by) & C(bx));
}

// Same for the doubled magnitude case (x, x, z): 3 distinct arrangements.
inline int perm_count3(int bx, int bz) {
  auto A = [](int m) { return m & 1; };
  auto B = [](int m) { return (m >> 1) & 1; };
  auto C = [](int m) { return (m >> 2) & 1; };
  return (A(bz) & B(bx) & C(bx)) + (A(bx) & B(bz) & C(bx)) + (A(bx) & B(bx) & C(bz));
}

// Ordered arrangements of the canonical solution {x, y, -(x+y)}; the global
// sign flip is applied by the caller.
inline void append_arrangements(long long x, long long y, std::vector<Triple>& out) {
  long long z = x + y;
  if (x != y) {
    out.assign({{x, y, -z}, {x, -z, y}, {y, x, -z}, {y, -z, x}, {-z, x, y}, {-z, y, x}});
  } else {
    out.assign({{x, x, -z}, {x, -z, x}, {-z, x, x}});
  }
}

}  // namespace detail

using TripleSink = std::function<void(const Triple&)>;

// Exact count of ordered signed triples: A + B + C = 0, entries nonzero with
// gcd 1, magnitudes <= N, and the three radical constraints. Enumerates
// canonical pairs 0 < x <= y with x + y <= N and gcd(x, y) = 1, then counts
// the arrangements whose per-position constraints hold, times 2 for the
// global sign flip. Counting (no sink) shards the outer loop; the result is
// independent of the worker count.
inline unsigned long long count_exact(const AbcParams& p, const SpfSieve& sieve,
                                      const TripleSink& sink = {}, unsigned workers = 0) {
  validate_params(p);
  if (static_cast<std::uint64_t>(p.n) > sieve.limit)
    throw std::out_of_range("count_exact: N exceeds sieve limit");
  const long long n = p.n;
  const auto bits = detail::ok_bits(p, sieve);

  std::uint8_t perm6[8][8][8];
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) perm6[i][j][k] = static_cast<std::uint8_t>(detail::perm_count6(i, j, k));

  if (sink) {
    unsigned long long total = 0;
    std::vector<Triple> arr;
    for (long long x = 1; 2 * x <= n; ++x) {
      for (long long y = x; x + y <= n; ++y) {
        if (std::gcd(x, y) != 1) continue;
        detail::append_arrangements(x, y, arr);
        for (const Triple& t : arr) {
          int mask =
              (bits[t.A < 0 ? -t.A : t.A] & 1) & ((bits[t.B < 0 ? -t.B : t.B] >> 1) & 1) &
              ((bits[t.C < 0 ? -t.C : t.C] >> 2) & 1);
          if (mask) {
            total += 2;
            sink(t);
            sink({-t.A, -t.B, -t.C});
          }
        }
      }
    }
    return total;
  }

  unsigned nworkers = workers != 0 ? workers : std::max(1u, std::thread::hardware_concurrency());
  auto run = [&](unsigned w, unsigned stride) {
    unsigned long long local = 0;
    for (long long x = 1 + w; 2 * x <= n; x += stride) {
      std::uint8_t bx = bits[x];
      for (long long y = x; x + y <= n; ++y) {
        if (std::gcd(x, y) != 1) continue;
        if (x != y)
          local += perm6[bx][bits[y]][bits[x + y]];
        else
          local += detail::perm_count3(bx, bits[x + y]);
      }
    }
    return local;
  };
  unsigned long long total = 0;
  if (nworkers <= 1) {
    total = run(0, 1);
  } else {
    std::vector<unsigned long long> partial(nworkers, 0);
    std::vector<std::thread> threads;
    threads.reserve(nworkers);
    for (unsigned w = 0; w < nworkers; ++w)
      threads.emplace_back([&, w] { partial[w] = run(w, nworkers); });
    for (auto& t : threads) t.join();
    for (auto v : partial) total += v;
  }
  return 2 * total;
}

enum class BucketKeyKind { V, S, T, ST };

inline BucketKeyKind parse_bucket_kind(std::string_view tag) {
  if (tag == "v") return BucketKeyKind::V;
  if (tag == "s") return BucketKeyKind::S;
  if (tag == "t") return BucketKeyKind::T;
  if (tag == "st") return BucketKeyKind::ST;
  throw std::invalid_argument("unknown bucket key tag: " + std::string(tag));
}

inline std::string bucket_kind_name(BucketKeyKind k) {
  switch (k) {
    case BucketKeyKind::V: return "v";
    case BucketKeyKind::S: return "s";
    case BucketKeyKind::T: return "t";
    case BucketKeyKind::ST: return "st";
  }
  return "?";
}

// Bucket key: per position (A, B, C) the dyadic key of the chosen part, plus
// a second key for the joint (S, T) kind; unused slots hold -1.
using BucketKey = std::array<int, 6>;

struct BucketReport {
  BucketKeyKind kind = BucketKeyKind::V;
  std::map<BucketKey, long long> buckets;
  unsigned long long total = 0;
};

inline std::string bucket_key_to_string(BucketKeyKind kind, const BucketKey& key) {
  std::string s;
  for (int pos = 0; pos < 3; ++pos) {
    if (pos) s += ',';
    s += std::to_string(key[2 * pos]);
    if (kind == BucketKeyKind::ST) s += ':' + std::to_string(key[2 * pos + 1]);
  }
  return s;
}

// Upper-bound expression for one bucket, evaluated at the dyadic interval
// lower endpoints: N^(a+b+c-1) + v(A)v(B)v(C) for the v key, and
// T(A)T(B)T(C) + sqrt(S(A)S(B)S(C) T(A)T(B)T(C)) for the joint key. The
// single S and T keys carry no bound expression.
inline std::optional<double> bucket_bound(BucketKeyKind kind, const AbcParams& p,
                                          const BucketKey& key) {
  if (kind == BucketKeyKind::V) {
    double exponent = to_double(p.a) + to_double(p.b) + to_double(p.c) - 1.0;
    double vprod = std::exp2(static_cast<double>(key[0] + key[2] + key[4]));
    return std::pow(static_cast<double>(p.n), exponent) + vprod;
  }
  if (kind == BucketKeyKind::ST) {
    double sprod = std::exp2(static_cast<double>(key[0] + key[2] + key[4]));
    double tprod = std::exp2(static_cast<double>(key[1] + key[3] + key[5]));
    return tprod + std::sqrt(sprod * tprod);
  }
  return std::nullopt;
}

// Assigns every ordered solution to exactly one bucket keyed by the dyadic
// intervals of the chosen parts of |A|, |B|, |C|.
inline BucketReport bucket_report(const AbcParams& p, BucketKeyKind kind, const SpfSieve& sieve) {
  validate_params(p);
  if (static_cast<std::uint64_t>(p.n) > sieve.limit)
    throw std::out_of_range("bucket_report: N exceeds sieve limit");
  const long long n = p.n;
  const auto bits = detail::ok_bits(p, sieve);
  std::vector<int> k1(static_cast<std::size_t>(n) + 1, 0), k2(static_cast<std::size_t>(n) + 1, -1);
  for (long long x = 1; x <= n; ++x) {
    FactoredInteger f = decompose(x, sieve);
    switch (kind) {
      case BucketKeyKind::V: k1[x] = dyadic_key(f.v); break;
      case BucketKeyKind::S: k1[x] = dyadic_key(f.S); break;
      case BucketKeyKind::T: k1[x] = dyadic_key(f.T); break;
      case BucketKeyKind::ST:
        k1[x] = dyadic_key(f.S);
        k2[x] = dyadic_key(f.T);
        break;
    }
  }
  BucketReport report;
  report.kind = kind;
  std::vector<Triple> arr;
  for (long long x = 1; 2 * x <= n; ++x) {
    for (long long y = x; x + y <= n; ++y) {
      if (std::gcd(x, y) != 1) continue;
      detail::append_arrangements(x, y, arr);
      for (const Triple& t : arr) {
        long long ma = t.A < 0 ? -t.A : t.A, mb = t.B < 0 ? -t.B : t.B, mc = t.C < 0 ? -t.C : t.C;
        if (!((bits[ma] & 1) & ((bits[mb] >> 1) & 1) & ((bits[mc] >> 2) & 1))) continue;
        BucketKey key{k1[ma], k2[ma], k1[mb], k2[mb], k1[mc], k2[mc]};
        report.buckets[key] += 2;  // the sign flip lands in the same bucket
        report.total += 2;
      }
    }
  }
  return report;
}

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  std::vector<double> residuals;
};

inline LinearFit linear_fit(const std::vector<std::pair<double, double>>& pts) {
  if (pts.size() < 2) throw std::domain_error("linear_fit: need at least 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(pts.size());
  double den = n * sxx - sx * sx;
  if (den == 0) throw std::domain_error("linear_fit: degenerate abscissae");
  LinearFit fit;
  fit.slope = (n * sxy - sx * sy) / den;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.residuals.reserve(pts.size());
  for (auto [x, y] : pts) fit.residuals.push_back(y - (fit.slope * x + fit.intercept));
  return fit;
}

struct ExponentFit {
  double slope = 0;
  double intercept = 0;
  std::vector<std::pair<int, unsigned long long>> counts;  // (k, count at N = 2^k)
  std::vector<std::pair<int, double>> log2_counts;         // nonzero counts only
  std::vector<double> residuals;
  std::vector<int> zero_ks;
};

// Least-squares fit of log2 count(N = 2^k) against k; zero counts are
// excluded from the fit and reported.
inline ExponentFit exponent_fit(Rational a, Rational b, Rational c, int k_min, int k_max,
                                const SpfSieve& sieve, unsigned workers = 0) {
  if (k_min >= k_max) throw std::invalid_argument("exponent_fit: need k_min < k_max");
  if (k_min < 0) throw std::invalid_argument("exponent_fit: k_min must be nonnegative");
  if ((1ull << k_max) > sieve.limit)
    throw std::out_of_range("exponent_fit: 2^k_max exceeds sieve limit");
  ExponentFit fit;
  std::vector<std::pair<double, double>> pts;
  for (int k = k_min; k <= k_max; ++k) {
    AbcParams p{a, b, c, 1ll << k};
    unsigned long long count = count_exact(p, sieve, {}, workers);
    fit.counts.emplace_back(k, count);
    if (count == 0) {
      fit.zero_ks.push_back(k);
    } else {
      double lg = std::log2(static_cast<double>(count));
      fit.log2_counts.emplace_back(k, lg);
      pts.emplace_back(static_cast<double>(k), lg);
    }
  }
  if (pts.size() < 2) throw std::domain_error("exponent_fit: fewer than 2 nonzero counts");
  LinearFit lf = linear_fit(pts);
  fit.slope = lf.slope;
  fit.intercept = lf.intercept;
  fit.residuals = std::move(lf.residuals);
  return fit;
}

// Solution CSV: one ordered solution per row.
inline void write_triples_csv(std::ostream& out, const std::vector<Triple>& triples,
                              const SpfSieve& sieve) {
  out << "A,B,C,r_A,r_B,r_C\n";
  for (const Triple& t : triples) {
    out << t.A << ',' << t.B << ',' << t.C << ','
        << radical(static_cast<std::uint64_t>(t.A < 0 ? -t.A : t.A), sieve) << ','
        << radical(static_cast<std::uint64_t>(t.B < 0 ? -t.B : t.B), sieve) << ','
        << radical(static_cast<std::uint64_t>(t.C < 0 ? -t.C : t.C), sieve) << '\n';
  }
}

}  // namespace abclab
