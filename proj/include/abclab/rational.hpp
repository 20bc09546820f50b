#pragma once

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace abclab {

// Exact rational with word-sized components, always reduced with den > 0.
// Command-line exponents like 2/3 live here; comparisons never touch floats.
struct Rational {
  long long num = 0;
  long long den = 1;
};

inline Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

inline bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
inline bool operator!=(Rational a, Rational b) { return !(a == b); }
inline bool operator<(Rational a, Rational b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}
inline bool operator<=(Rational a, Rational b) { return !(b < a); }

inline double to_double(Rational r) { return static_cast<double>(r.num) / static_cast<double>(r.den); }

// Accepts "P/Q" or "P" with optional leading minus on P.
inline Rational parse_rational(std::string_view s) {
  auto parse_ll = [](std::string_view t) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size())
      throw std::invalid_argument("malformed rational: " + std::string(t));
    return v;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return make_rational(parse_ll(s), 1);
  if (slash == 0 || slash + 1 >= s.size())
    throw std::invalid_argument("malformed rational: " + std::string(s));
  return make_rational(parse_ll(s.substr(0, slash)), parse_ll(s.substr(slash + 1)));
}

inline std::string to_string(Rational r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace abclab
