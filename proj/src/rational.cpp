#include "vdc/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace vdc {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (den_.negative()) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const Rational& a, const Rational& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

Rational Rational::abs() const { return Rational(num_.abs(), den_); }

double Rational::to_double() const {
  if (num_.is_zero()) return 0.0;
  double n = num_.to_double(), d = den_.to_double();
  if (std::isfinite(n) && std::isfinite(d)) return n / d;
  double lg = num_.log_natural() - den_.log_natural();
  double mag = std::exp(lg);
  return num_.negative() ? -mag : mag;
}

double Rational::log_natural() const {
  if (num_.is_zero()) throw std::domain_error("Rational: log of zero");
  return num_.log_natural() - den_.log_natural();
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) {
  return os << v.to_string();
}

RationalAngle RationalAngle::reduce(const BigInt& p, const BigInt& q) {
  if (q.is_zero()) throw std::domain_error("RationalAngle: zero denominator");
  BigInt qq = q.abs();
  BigInt pp = mod_floor(q.negative() ? -p : p, qq);
  BigInt g = gcd(pp, qq);
  RationalAngle r;
  if (pp.is_zero()) {
    r.p_ = 0;
    r.q_ = 1;
    return r;
  }
  r.p_ = pp / g;
  r.q_ = qq / g;
  return r;
}

RationalAngle RationalAngle::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos)
    return reduce(BigInt::from_string(text), BigInt(1));
  return reduce(BigInt::from_string(text.substr(0, slash)),
                BigInt::from_string(text.substr(slash + 1)));
}

RationalAngle RationalAngle::frac_quadratic(const BigInt& k, const BigInt& L,
                                            const RationalAngle& x) {
  // ((k^2 L^2 p) mod q) / q, all modular so intermediates stay small
  const BigInt& q = x.q_;
  BigInt km = mod_floor(k, q);
  BigInt lm = mod_floor(L, q);
  BigInt t = mod_floor(km * km, q);
  t = mod_floor(t * mod_floor(lm * lm, q), q);
  t = mod_floor(t * x.p_, q);
  return reduce(t, q);
}

RationalAngle RationalAngle::operator+(const RationalAngle& o) const {
  return reduce(p_ * o.q_ + o.p_ * q_, q_ * o.q_);
}

RationalAngle RationalAngle::operator-(const RationalAngle& o) const {
  return reduce(p_ * o.q_ - o.p_ * q_, q_ * o.q_);
}

RationalAngle RationalAngle::scaled(const BigInt& k) const {
  return reduce(mod_floor(k, q_) * p_, q_);
}

bool operator==(const RationalAngle& a, const RationalAngle& b) {
  return a.p_ == b.p_ && a.q_ == b.q_;
}

double RationalAngle::to_double() const { return Rational(p_, q_).to_double(); }

std::string RationalAngle::to_string() const {
  return p_.to_string() + "/" + q_.to_string();
}

std::ostream& operator<<(std::ostream& os, const RationalAngle& v) {
  return os << v.to_string();
}

Rational angle_distance(const RationalAngle& x, const BigInt& a, const BigInt& b) {
  return (Rational(x.num(), x.den()) - Rational(a, b)).abs();
}

}  // namespace vdc
