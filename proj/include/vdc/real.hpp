#pragma once

#include <mpfr.h>

#include <complex>
#include <string>

#include "vdc/rational.hpp"

namespace vdc {

// RAII wrapper over an mpfr value. Binary operations take the precision of
// the left operand; mixed-precision use is not needed here.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  static Real of(double x, mpfr_prec_t prec);
  static Real of(const BigInt& x, mpfr_prec_t prec);
  static Real of(const Rational& x, mpfr_prec_t prec);
  static Real pi(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  Real operator+(const Real& o) const;
  Real operator-(const Real& o) const;
  Real operator*(const Real& o) const;
  Real operator/(const Real& o) const;
  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real operator-() const;

  Real sqrt() const;
  Real abs() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits = 20) const;

  int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

// Complex number as a pair of Reals at one precision.
struct CNum {
  Real re, im;
  explicit CNum(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  CNum(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  CNum operator+(const CNum& o) const { return {re + o.re, im + o.im}; }
  CNum operator-(const CNum& o) const { return {re - o.re, im - o.im}; }
  CNum operator*(const CNum& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CNum& operator+=(const CNum& o) { re += o.re; im += o.im; return *this; }
  Real magnitude() const { return (re * re + im * im).sqrt(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

// e(x) = exp(2*pi*i*x) for a rational angle, with |error| <= 2^(1-precision).
CNum exp_unit(const RationalAngle& x, mpfr_prec_t precision);

// Same for an arbitrary exact fraction num/den (value taken as is, mod 1
// irrelevant for the exponential).
CNum exp_unit(const BigInt& num, const BigInt& den, mpfr_prec_t precision);

// Correctly rounded double-precision e(s/q), used to seed kernel tables.
std::complex<double> exp_unit_d(uint64_t s, uint64_t q);

}  // namespace vdc
