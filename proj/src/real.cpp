#include "vdc/real.hpp"

#include <stdexcept>

namespace vdc {

Real Real::of(double x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

static void set_from_bigint(mpfr_ptr dst, const BigInt& x) {
  if (x.is_zero()) {
    mpfr_set_zero(dst, 1);
    return;
  }
  std::string hex = x.to_hex_mag();
  if (mpfr_set_str(dst, hex.c_str(), 16, MPFR_RNDN) != 0 && hex.empty())
    throw std::runtime_error("BigInt -> mpfr conversion failed");
  if (x.negative()) mpfr_neg(dst, dst, MPFR_RNDN);
}

Real Real::of(const BigInt& x, mpfr_prec_t prec) {
  Real r(prec);
  set_from_bigint(r.v_, x);
  return r;
}

Real Real::of(const Rational& x, mpfr_prec_t prec) {
  // one extra rounding only: num and den converted at prec+64
  Real n(prec + 64), d(prec + 64), r(prec);
  set_from_bigint(n.raw(), x.num());
  set_from_bigint(d.raw(), x.den());
  mpfr_div(r.v_, n.raw(), d.raw(), MPFR_RNDN);
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::operator+(const Real& o) const {
  Real r(prec());
  mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}
Real Real::operator-(const Real& o) const {
  Real r(prec());
  mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}
Real Real::operator*(const Real& o) const {
  Real r(prec());
  mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}
Real Real::operator/(const Real& o) const {
  Real r(prec());
  mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}
Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}
Real Real::sqrt() const {
  Real r(prec());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}
Real Real::abs() const {
  Real r(prec());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  char fmt[32];
  snprintf(fmt, sizeof fmt, "%%.%dRg", digits);
  char* s = nullptr;
  if (mpfr_asprintf(&s, fmt, v_) < 0) throw std::runtime_error("mpfr_asprintf");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

static CNum exp_unit_impl(const BigInt& num, const BigInt& den, mpfr_prec_t precision) {
  if (precision < 53) throw std::domain_error("exp_unit: precision must be >= 53");
  mpfr_prec_t wp = precision + 32;
  Real n = Real::of(num, wp), d = Real::of(den, wp);
  Real t(wp);
  mpfr_div(t.raw(), n.raw(), d.raw(), MPFR_RNDN);
  // reduce mod 1 in exact rational space first would lose nothing; the caller
  // passes reduced angles. 2*pi*t:
  Real angle(wp);
  mpfr_const_pi(angle.raw(), MPFR_RNDN);
  mpfr_mul(angle.raw(), angle.raw(), t.raw(), MPFR_RNDN);
  mpfr_mul_2ui(angle.raw(), angle.raw(), 1, MPFR_RNDN);
  CNum out{Real(precision), Real(precision)};
  Real s(wp), c(wp);
  mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
  mpfr_set(out.re.raw(), c.raw(), MPFR_RNDN);
  mpfr_set(out.im.raw(), s.raw(), MPFR_RNDN);
  return out;
}

CNum exp_unit(const RationalAngle& x, mpfr_prec_t precision) {
  return exp_unit_impl(x.num(), x.den(), precision);
}

CNum exp_unit(const BigInt& num, const BigInt& den, mpfr_prec_t precision) {
  return exp_unit_impl(num, den, precision);
}

std::complex<double> exp_unit_d(uint64_t s, uint64_t q) {
  mpfr_t t, c, sn;
  mpfr_init2(t, 96);
  mpfr_init2(c, 96);
  mpfr_init2(sn, 96);
  mpfr_const_pi(t, MPFR_RNDN);
  mpfr_mul_ui(t, t, 2 * s, MPFR_RNDN);
  mpfr_div_ui(t, t, q, MPFR_RNDN);
  mpfr_sin_cos(sn, c, t, MPFR_RNDN);
  std::complex<double> r(mpfr_get_d(c, MPFR_RNDN), mpfr_get_d(sn, MPFR_RNDN));
  mpfr_clear(t);
  mpfr_clear(c);
  mpfr_clear(sn);
  return r;
}

}  // namespace vdc
