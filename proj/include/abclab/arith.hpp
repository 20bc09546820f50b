#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace abclab {

// Smallest-prime-factor sieve. spf[n] is the least prime dividing n, so one
// factorization costs O(log n) divisions; immutable after construction and
// safe for concurrent readers.
struct SpfSieve {
  std::uint64_t limit = 0;
  std::vector<std::uint32_t> spf;     // indexed 0..limit, entries 0 and 1 unused
  std::vector<std::uint32_t> primes;  // ascending

  bool is_prime(std::uint64_t n) const { return n >= 2 && n <= limit && spf[n] == n; }
};

// |v| without signed overflow at the extreme value.
inline std::uint64_t abs_u64(long long v) {
  return v < 0 ? -static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

inline SpfSieve build_sieve(std::uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("sieve limit must be at least 2");
  if (limit > 0xFFFFFFFFull) throw std::invalid_argument("sieve limit exceeds 32-bit range");
  SpfSieve s;
  s.limit = limit;
  s.spf.assign(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (s.spf[i] == 0) {
      s.spf[i] = static_cast<std::uint32_t>(i);
      s.primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : s.primes) {
      if (p > s.spf[i] || i * p > limit) break;
      s.spf[i * p] = p;
    }
  }
  return s;
}

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
};

// An integer together with its factorization and the multiplicative parts
// used throughout; all parts are computed from |n|:
//   r: product of distinct primes (radical)
//   u: primes dividing exactly once, e = |n| / u
//   v: distinct primes dividing at least twice, so r = u * v
//   S: largest integer whose square divides |n|, T = |n| / S^2
struct FactoredInteger {
  long long n = 0;
  std::vector<PrimePower> factors;
  long long r = 1, u = 1, e = 1, v = 1, S = 1, T = 1;
};

namespace detail {
template <class Fn>
inline void for_each_prime_power(const SpfSieve& sieve, std::uint64_t value, Fn&& fn) {
  while (value > 1) {
    std::uint32_t p = sieve.spf[value];
    std::uint32_t k = 0;
    while (value % p == 0) {
      value /= p;
      ++k;
    }
    fn(p, k);
  }
}
}  // namespace detail

inline FactoredInteger decompose(long long n, const SpfSieve& sieve) {
  if (n == 0) throw std::invalid_argument("decompose: n must be nonzero");
  FactoredInteger f;
  f.n = n;
  std::uint64_t m = abs_u64(n);
  if (m == 1) return f;
  if (m > sieve.limit) throw std::out_of_range("decompose: |n| exceeds sieve limit");
  detail::for_each_prime_power(sieve, m, [&](std::uint32_t p, std::uint32_t k) {
    f.factors.push_back({p, k});
    f.r *= p;
    if (k == 1) {
      f.u *= p;
    } else {
      f.v *= p;
      long long pk = 1;
      for (std::uint32_t i = 0; i < k; ++i) pk *= p;
      f.e *= pk;
    }
    for (std::uint32_t i = 0; i < k / 2; ++i) f.S *= p;
  });
  f.T = static_cast<long long>(m) / (f.S * f.S);
  return f;
}

inline std::uint64_t radical(std::uint64_t n, const SpfSieve& sieve) {
  if (n == 0) throw std::invalid_argument("radical: n must be nonzero");
  if (n > sieve.limit) throw std::out_of_range("radical: n exceeds sieve limit");
  std::uint64_t r = 1;
  detail::for_each_prime_power(sieve, n, [&](std::uint32_t p, std::uint32_t) { r *= p; });
  return r;
}

inline int moebius(std::uint64_t n, const SpfSieve& sieve) {
  if (n == 0) throw std::invalid_argument("moebius: n must be positive");
  if (n > sieve.limit) throw std::out_of_range("moebius: n exceeds sieve limit");
  int sign = 1;
  bool squarefree = true;
  detail::for_each_prime_power(sieve, n, [&](std::uint32_t, std::uint32_t k) {
    if (k >= 2) squarefree = false;
    sign = -sign;
  });
  return squarefree ? sign : 0;
}

// Number of ordered triples of positive integers with product n.
inline std::uint64_t d3(std::uint64_t n, const SpfSieve& sieve) {
  if (n == 0) throw std::invalid_argument("d3: n must be positive");
  if (n > sieve.limit) throw std::out_of_range("d3: n exceeds sieve limit");
  std::uint64_t result = 1;
  detail::for_each_prime_power(sieve, n, [&](std::uint32_t, std::uint32_t k) {
    result *= static_cast<std::uint64_t>(k + 1) * (k + 2) / 2;
  });
  return result;
}

// Exact |{k : 1 <= k <= N, r(k) = m}| by depth-first search over exponent
// vectors with every exponent >= 1. Returns 0 when m is not squarefree.
inline std::uint64_t count_with_radical(std::uint64_t m, std::uint64_t N, const SpfSieve& sieve) {
  if (m == 0) throw std::invalid_argument("count_with_radical: m must be positive");
  if (m > sieve.limit || N > sieve.limit)
    throw std::out_of_range("count_with_radical: argument exceeds sieve limit");
  std::vector<std::uint32_t> ps;
  if (m > 1) {
    bool squarefree = true;
    detail::for_each_prime_power(sieve, m, [&](std::uint32_t p, std::uint32_t k) {
      if (k >= 2) squarefree = false;
      ps.push_back(p);
    });
    if (!squarefree) return 0;
  }
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t cur) -> void {
    if (i == ps.size()) {
      ++count;
      return;
    }
    std::uint64_t p = ps[i];
    std::uint64_t x = cur;
    while (x <= N / p) {
      x *= p;
      self(self, i + 1, x);
    }
  };
  if (m <= N) rec(rec, 0, 1);
  return count;
}

// Sieve cache file: "ABCSPF1", limit as 64-bit little-endian, then spf values
// for n = 2..limit as 32-bit little-endian.
inline void save_sieve(const SpfSieve& sieve, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open sieve cache for writing: " + path);
  out.write("ABCSPF1", 7);
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((sieve.limit >> (8 * i)) & 0xFF);
  out.write(buf, 8);
  for (std::uint64_t n = 2; n <= sieve.limit; ++n) {
    std::uint32_t v = sieve.spf[n];
    for (int i = 0; i < 4; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(buf, 4);
  }
  out.flush();
  if (!out) throw std::runtime_error("failed writing sieve cache: " + path);
}

inline std::optional<SpfSieve> load_sieve(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char hdr[7];
  if (!in.read(hdr, 7) || std::memcmp(hdr, "ABCSPF1", 7) != 0) return std::nullopt;
  unsigned char buf[8];
  if (!in.read(reinterpret_cast<char*>(buf), 8)) return std::nullopt;
  std::uint64_t limit = 0;
  for (int i = 0; i < 8; ++i) limit |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  if (limit < 2 || limit > 0xFFFFFFFFull) return std::nullopt;
  SpfSieve s;
  s.limit = limit;
  s.spf.assign(limit + 1, 0);
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (!in.read(reinterpret_cast<char*>(buf), 4)) return std::nullopt;
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(buf[i]) << (8 * i);
    s.spf[n] = v;
  }
  if (s.spf[2] != 2) return std::nullopt;
  for (std::uint64_t n = 2; n <= limit; ++n)
    if (s.spf[n] == n) s.primes.push_back(static_cast<std::uint32_t>(n));
  return s;
}

}  // namespace abclab
