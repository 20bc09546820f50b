#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace abclab {

// Unsigned big integer, little-endian 64-bit limbs, no trailing zero limbs.
// Just enough arithmetic for exact power comparisons and exact rational
// partial sums: add, sub, mul, word mul, pow, compare, shift, double conversion.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t v) {
    if (v != 0) limbs_.push_back(v);
  }

  static BigUint pow(std::uint64_t base, std::uint64_t exp) {
    BigUint result(1);
    BigUint b(base);
    while (exp != 0) {
      if (exp & 1) result = result * b;
      exp >>= 1;
      if (exp != 0) b = b * b;
    }
    return result;
  }

  bool is_zero() const { return limbs_.empty(); }

  std::size_t bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) + (64 - std::countl_zero(limbs_.back()));
  }

  int compare(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size())
      return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
  }

  bool operator==(const BigUint& o) const { return compare(o) == 0; }
  bool operator!=(const BigUint& o) const { return compare(o) != 0; }
  bool operator<(const BigUint& o) const { return compare(o) < 0; }
  bool operator<=(const BigUint& o) const { return compare(o) <= 0; }
  bool operator>(const BigUint& o) const { return compare(o) > 0; }
  bool operator>=(const BigUint& o) const { return compare(o) >= 0; }

  BigUint& operator+=(const BigUint& o) {
    limbs_.resize(std::max(limbs_.size(), o.limbs_.size()), 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      unsigned __int128 sum = carry + limbs_[i];
      if (i < o.limbs_.size()) sum += o.limbs_[i];
      limbs_[i] = static_cast<std::uint64_t>(sum);
      carry = sum >> 64;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
  }

  // Requires *this >= o.
  BigUint& operator-=(const BigUint& o) {
    if (compare(o) < 0) throw std::invalid_argument("BigUint: negative difference");
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      unsigned __int128 rhs = borrow;
      if (i < o.limbs_.size()) rhs += o.limbs_[i];
      if (limbs_[i] >= rhs) {
        limbs_[i] -= static_cast<std::uint64_t>(rhs);
        borrow = 0;
      } else {
        limbs_[i] = static_cast<std::uint64_t>(((unsigned __int128)1 << 64) + limbs_[i] - rhs);
        borrow = 1;
      }
    }
    trim();
    return *this;
  }

  BigUint& mul_word(std::uint64_t w) {
    if (w == 0 || is_zero()) {
      limbs_.clear();
      return *this;
    }
    unsigned __int128 carry = 0;
    for (auto& l : limbs_) {
      unsigned __int128 prod = (unsigned __int128)l * w + carry;
      l = static_cast<std::uint64_t>(prod);
      carry = prod >> 64;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
  }

  BigUint operator*(const BigUint& o) const {
    if (is_zero() || o.is_zero()) return {};
    BigUint r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      unsigned __int128 carry = 0;
      for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
        unsigned __int128 cur =
            (unsigned __int128)limbs_[i] * o.limbs_[j] + r.limbs_[i + j] + carry;
        r.limbs_[i + j] = static_cast<std::uint64_t>(cur);
        carry = cur >> 64;
      }
      r.limbs_[i + o.limbs_.size()] = static_cast<std::uint64_t>(carry);
    }
    r.trim();
    return r;
  }

  BigUint operator+(const BigUint& o) const {
    BigUint r = *this;
    r += o;
    return r;
  }

  BigUint operator-(const BigUint& o) const {
    BigUint r = *this;
    r -= o;
    return r;
  }

  BigUint shifted_right(std::size_t bits) const {
    std::size_t words = bits / 64, rem = bits % 64;
    if (words >= limbs_.size()) return {};
    BigUint r;
    r.limbs_.assign(limbs_.begin() + static_cast<std::ptrdiff_t>(words), limbs_.end());
    if (rem != 0) {
      for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        r.limbs_[i] >>= rem;
        if (i + 1 < r.limbs_.size()) r.limbs_[i] |= r.limbs_[i + 1] << (64 - rem);
      }
    }
    r.trim();
    return r;
  }

  // Saturates to +inf past the double range; use ratio_as_double for quotients
  // of large values.
  double to_double() const {
    double r = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
      r = r * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
    return r;
  }

  friend double ratio_as_double(const BigUint& num, const BigUint& den);

 private:
  std::vector<std::uint64_t> limbs_;

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }
};

inline double ratio_as_double(const BigUint& num, const BigUint& den) {
  if (den.is_zero()) throw std::domain_error("BigUint ratio: zero denominator");
  if (num.is_zero()) return 0.0;
  auto top = [](const BigUint& v, std::size_t& shift) {
    std::size_t bits = v.bit_length();
    shift = bits > 96 ? bits - 96 : 0;
    return v.shifted_right(shift).to_double();
  };
  std::size_t sn = 0, sd = 0;
  double vn = top(num, sn), vd = top(den, sd);
  return (vn / vd) * std::exp2(static_cast<double>(sn) - static_cast<double>(sd));
}

// Decides a^ea <= b^eb exactly. A long-double log2 screen settles the far
// cases; only near-ties materialize the full powers.
inline bool pow_leq(std::uint64_t a, std::uint64_t ea, std::uint64_t b, std::uint64_t eb) {
  if (a == 0 || b == 0) throw std::invalid_argument("pow_leq: zero base");
  long double la = ea == 0 ? 0.0L : static_cast<long double>(ea) * std::log2(static_cast<long double>(a));
  long double lb = eb == 0 ? 0.0L : static_cast<long double>(eb) * std::log2(static_cast<long double>(b));
  if (la + 1e-6L < lb) return true;
  if (la > lb + 1e-6L) return false;
  return BigUint::pow(a, ea).compare(BigUint::pow(b, eb)) <= 0;
}

inline bool pow_gt(std::uint64_t a, std::uint64_t ea, std::uint64_t b, std::uint64_t eb) {
  return !pow_leq(a, ea, b, eb);
}

// Exact signed rational on BigUint components. Kept unreduced: equality is
// decided by cross-multiplication, so a canonical gcd step is never needed.
struct BigRational {
  bool negative = false;
  BigUint num;
  BigUint den = BigUint(1);

  double to_double() const {
    double v = ratio_as_double(num, den);
    return negative ? -v : v;
  }

  bool same_value(const BigRational& o) const {
    if (num.is_zero() && o.num.is_zero()) return true;
    if (num.is_zero() != o.num.is_zero()) return false;
    if (negative != o.negative) return false;
    return (num * o.den) == (o.num * den);
  }
};

}  // namespace abclab
