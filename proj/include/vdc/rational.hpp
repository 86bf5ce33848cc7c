#pragma once

#include <iosfwd>
#include <string>

#include "vdc/bigint.hpp"

namespace vdc {

// Exact signed fraction in lowest terms, denominator always positive.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt num, BigInt den);
  Rational(long long v) : num_(v), den_(1) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  int signum() const { return num_.signum(); }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational abs() const;
  double to_double() const;
  // natural log of |value|; requires nonzero
  double log_natural() const;
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

 private:
  BigInt num_, den_;
};

// A point of the circle [0,1): reduced fraction p/q with 0 <= p < q,
// gcd(p,q) = 1, q >= 1. All exact evaluation in the toolkit happens here.
class RationalAngle {
 public:
  RationalAngle() : p_(0), q_(1) {}

  // Value p/q taken mod 1 and reduced; q must be nonzero.
  static RationalAngle reduce(const BigInt& p, const BigInt& q);
  static RationalAngle parse(const std::string& text);  // "p/q" or integer

  const BigInt& num() const { return p_; }
  const BigInt& den() const { return q_; }
  bool is_zero() const { return p_.is_zero(); }

  // Fractional part of k^2 L^2 * (p/q), computed exactly.
  static RationalAngle frac_quadratic(const BigInt& k, const BigInt& L,
                                      const RationalAngle& x);

  RationalAngle operator+(const RationalAngle& o) const;  // mod 1
  RationalAngle operator-(const RationalAngle& o) const;  // mod 1
  // k*x mod 1
  RationalAngle scaled(const BigInt& k) const;

  friend bool operator==(const RationalAngle& a, const RationalAngle& b);

  Rational to_rational() const { return Rational(p_, q_); }
  double to_double() const;
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const RationalAngle& v);

 private:
  BigInt p_, q_;
};

// |x - a/b| as an exact rational distance.
Rational angle_distance(const RationalAngle& x, const BigInt& a, const BigInt& b);

}  // namespace vdc
