#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "abclab/arith.hpp"

namespace abclab {

// Diagonal ternary form alpha X^2 + beta Y^2 + gamma Z^2 with a search box;
// coefficients are nonzero, pairwise coprime and not all of one sign.
struct ConicInstance {
  long long alpha = 0, beta = 0, gamma = 0;
  long long r1 = 0, r2 = 0, r3 = 0;
};

struct ConicPoint {
  long long x = 0, y = 0, z = 0;
};

struct ConicScan {
  std::vector<ConicPoint> points;
  bool definite = false;  // all coefficients of one sign: only the zero solution exists
};

namespace detail {

inline std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && (unsigned __int128)r * r > n) --r;
  while ((unsigned __int128)(r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline void validate_conic(const ConicInstance& inst) {
  if (inst.alpha == 0 || inst.beta == 0 || inst.gamma == 0)
    throw std::invalid_argument("conic: coefficients must be nonzero");
  auto mag = [](long long v) { return abs_u64(v); };
  if (std::gcd(mag(inst.alpha), mag(inst.beta)) != 1 ||
      std::gcd(mag(inst.alpha), mag(inst.gamma)) != 1 ||
      std::gcd(mag(inst.beta), mag(inst.gamma)) != 1)
    throw std::invalid_argument("conic: coefficients must be pairwise coprime");
  if (inst.r1 < 1 || inst.r2 < 1 || inst.r3 < 1)
    throw std::invalid_argument("conic: box bounds must be positive");
}

}  // namespace detail

// All primitive integer zeros of the form in the box, by scanning (X, Y) and
// testing whether -(alpha X^2 + beta Y^2)/gamma is a permitted perfect
// square. Square detection is exact integer arithmetic.
inline ConicScan count_primitive_points(const ConicInstance& inst) {
  detail::validate_conic(inst);
  ConicScan scan;
  bool pos = inst.alpha > 0 && inst.beta > 0 && inst.gamma > 0;
  bool neg = inst.alpha < 0 && inst.beta < 0 && inst.gamma < 0;
  if (pos || neg) {
    scan.definite = true;
    return scan;
  }
  const __int128 zmax2 = (__int128)inst.r3 * inst.r3;
  for (long long x = -inst.r1; x <= inst.r1; ++x) {
    for (long long y = -inst.r2; y <= inst.r2; ++y) {
      __int128 s = (__int128)inst.alpha * x * x + (__int128)inst.beta * y * y;
      if (s % inst.gamma != 0) continue;
      __int128 q = -(s / inst.gamma);
      if (q < 0 || q > zmax2) continue;
      auto z = static_cast<long long>(detail::isqrt_u64(static_cast<std::uint64_t>(q)));
      if ((__int128)z * z != q) continue;
      long long g = std::gcd(std::gcd(x < 0 ? -x : x, y < 0 ? -y : y), z);
      if (g != 1) continue;
      scan.points.push_back({x, y, z});
      if (z > 0) scan.points.push_back({x, y, -z});
    }
  }
  return scan;
}

// (1 + sqrt(R1 R2 R3 / |alpha beta gamma|)) * d3(|alpha beta gamma|); for a
// pairwise-coprime diagonal form the determinant is |alpha beta gamma| and
// the gcd of the 2x2 minors is 1, and d3 splits over the coprime factors.
inline double hb_bound(const ConicInstance& inst, const SpfSieve& sieve) {
  detail::validate_conic(inst);
  auto mag = [](long long v) { return static_cast<std::uint64_t>(v < 0 ? -v : v); };
  double d3_product = static_cast<double>(d3(mag(inst.alpha), sieve)) *
                      static_cast<double>(d3(mag(inst.beta), sieve)) *
                      static_cast<double>(d3(mag(inst.gamma), sieve));
  double box = static_cast<double>(inst.r1) * static_cast<double>(inst.r2) *
               static_cast<double>(inst.r3);
  double det = static_cast<double>(mag(inst.alpha)) * static_cast<double>(mag(inst.beta)) *
               static_cast<double>(mag(inst.gamma));
  return (1.0 + std::sqrt(box / det)) * d3_product;
}

struct ConicReport {
  ConicInstance inst;
  long long count = 0;
  double bound = 0;
  double ratio = 0;
  bool flagged = false;  // definite form or invalid instance
};

struct SurveyResult {
  std::vector<ConicReport> rows;
  double max_ratio = 0;
};

// Per-instance counts and count/bound ratios; bad instances become flagged
// rows instead of aborting the survey.
inline SurveyResult survey(const std::vector<ConicInstance>& instances, const SpfSieve& sieve) {
  SurveyResult result;
  for (const ConicInstance& inst : instances) {
    ConicReport row;
    row.inst = inst;
    try {
      ConicScan scan = count_primitive_points(inst);
      row.count = static_cast<long long>(scan.points.size());
      if (scan.definite) {
        row.flagged = true;
      } else {
        row.bound = hb_bound(inst, sieve);
        row.ratio = static_cast<double>(row.count) / row.bound;
        result.max_ratio = std::max(result.max_ratio, row.ratio);
      }
    } catch (const std::invalid_argument&) {
      row.flagged = true;
    } catch (const std::out_of_range&) {
      row.flagged = true;
    }
    result.rows.push_back(row);
  }
  return result;
}

// Seeded instance generator shared by the CLI and the test fixtures. Per
// instance, in order: coefficient magnitudes uniform in [1, 200] redrawn as a
// block until pairwise coprime, then signs redrawn as a block until mixed,
// then box bounds uniform in [1, 100]. Draws use mt19937_64 modulo the range
// size, so streams are identical across platforms.
inline std::vector<ConicInstance> random_instances(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  auto draw = [&](long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<ConicInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    long long m1, m2, m3;
    for (;;) {
      m1 = draw(1, 200);
      m2 = draw(1, 200);
      m3 = draw(1, 200);
      if (std::gcd(m1, m2) == 1 && std::gcd(m1, m3) == 1 && std::gcd(m2, m3) == 1) break;
    }
    long long s1, s2, s3;
    for (;;) {
      s1 = draw(0, 1) != 0 ? 1 : -1;
      s2 = draw(0, 1) != 0 ? 1 : -1;
      s3 = draw(0, 1) != 0 ? 1 : -1;
      if (!(s1 == s2 && s2 == s3)) break;
    }
    ConicInstance inst;
    inst.alpha = s1 * m1;
    inst.beta = s2 * m2;
    inst.gamma = s3 * m3;
    inst.r1 = draw(1, 100);
    inst.r2 = draw(1, 100);
    inst.r3 = draw(1, 100);
    out.push_back(inst);
  }
  return out;
}

inline void write_survey_csv(std::ostream& out, const std::vector<ConicReport>& rows) {
  out << "alpha,beta,gamma,r1,r2,r3,count,bound,ratio\n";
  for (const ConicReport& r : rows) {
    out << r.inst.alpha << ',' << r.inst.beta << ',' << r.inst.gamma << ',' << r.inst.r1 << ','
        << r.inst.r2 << ',' << r.inst.r3 << ',' << r.count << ',' << r.bound << ',' << r.ratio
        << '\n';
  }
}

}  // namespace abclab
