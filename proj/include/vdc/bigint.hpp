#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace vdc {

// Sign-magnitude arbitrary-precision integer on 64-bit limbs.
// Canonical form: no leading zero limbs, zero is the empty limb vector
// with non-negative sign.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);
  BigInt(unsigned long long v);
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}
  BigInt(long v) : BigInt(static_cast<long long>(v)) {}
  BigInt(unsigned v) : BigInt(static_cast<unsigned long long>(v)) {}
  BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}

  static BigInt from_string(std::string_view dec);

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }
  int signum() const { return limbs_.empty() ? 0 : (neg_ ? -1 : 1); }
  bool negative() const { return neg_; }
  bool even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

  // Number of bits in the magnitude; 0 for zero.
  size_t bit_length() const;
  bool fits_u64() const { return limbs_.size() <= 1; }
  // |value| truncated to 64 bits.
  uint64_t low_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }
  // Magnitude modulo m (m > 0). Sign is ignored.
  uint64_t mag_mod_u64(uint64_t m) const;

  double to_double() const;    // +-inf when out of range
  double log_natural() const;  // natural log of the magnitude; requires != 0
  double log2_mag() const;     // log2 of the magnitude; requires != 0
  std::string to_string() const;
  std::string to_hex_mag() const;  // magnitude in lowercase hex, no prefix
  size_t digit_count() const;      // decimal digits of the magnitude

  BigInt abs() const;
  BigInt pow(uint64_t e) const;

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  BigInt& operator/=(const BigInt& o);
  BigInt& operator%=(const BigInt& o);
  BigInt& operator<<=(unsigned s);
  BigInt& operator>>=(unsigned s);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);
  friend BigInt operator<<(BigInt a, unsigned s) { return a <<= s; }
  friend BigInt operator>>(BigInt a, unsigned s) { return a >>= s; }

  // Truncated division: q rounds toward zero, r has the sign of a,
  // a == q*b + r, |r| < |b|.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

  friend BigInt gcd(BigInt a, BigInt b);
  friend BigInt lcm(const BigInt& a, const BigInt& b);
  friend BigInt isqrt(const BigInt& a);  // floor sqrt, requires a >= 0

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

  const std::vector<uint64_t>& limbs() const { return limbs_; }

 private:
  std::vector<uint64_t> limbs_;  // little-endian magnitude
  bool neg_ = false;

  void trim();
  static int cmp_mag(const BigInt& a, const BigInt& b);
  static void divmod_mag(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
};

BigInt gcd(BigInt a, BigInt b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt isqrt(const BigInt& a);

// Nonnegative remainder of a modulo m (m > 0), as in value mod m.
BigInt mod_floor(const BigInt& a, const BigInt& m);

}  // namespace vdc
