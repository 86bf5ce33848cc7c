#pragma once

#include <complex>
#include <vector>

#include "vdc/bigint.hpp"
#include "vdc/rational.hpp"
#include "vdc/real.hpp"

namespace vdc {

// Leading term of the averaged quadratic exponential sum at denominator q,
// dilation L^2: the magnitude form (vartheta) and the signed lower-bound
// form (tau). Cases: q | L^2 -> 1; q/(q,L^2) = 2 mod 4 -> 0; otherwise
// +-r^(-1/2) with r = q/(q,2L^2).
struct LeadingTerm {
  enum class Case { divides, vanishes, generic };
  Case tag;
  double value;
  BigInt r;  // meaningful in the generic case
};

LeadingTerm vartheta(const BigInt& L, const BigInt& q);
LeadingTerm tau(const BigInt& L, const BigInt& q);

// tau(p^j, p^k) for a prime p, via the per-prime case table. Used by the
// weight-scheme lemma machinery; agrees with tau() on prime powers.
double tau_prime_power(uint64_t p, int64_t j, int64_t k);

// E_{L,M}(q, eps) = min{ c1 ( sqrt(log q)/sqrt(M) + sqrt(q log q)/M
//                             + L^2 M^2 eps ), 2 }, natural log, log 1 := 0.
struct ErrorEnvelope {
  double c1;
  double value;        // in [0, 2]
  double term_root;    // sqrt(log q)/sqrt(M)
  double term_linear;  // sqrt(q log q)/M
  double term_taylor;  // L^2 M^2 eps
};

ErrorEnvelope error_envelope(const BigInt& L, const BigInt& M, const BigInt& q,
                             const Rational& eps, double c1);

// S(x, L, M) = (1/M) sum_{k=1..M} e(k^2 L^2 x), evaluated through the
// period-q' structure of the summand at rational x (q' is the reduced
// denominator of L^2 x mod 1), in O(q' + log M) arithmetic operations.
// precision <= 53 runs the double kernel engine, higher precisions run mpfr.
CNum partial_sum(const RationalAngle& x, const BigInt& L, const BigInt& M,
                 mpfr_prec_t precision);

// (1/q) sum_{k=1..q} e(k^2 L^2 p/q); requires gcd(p,q) = 1, q >= 1.
// The exact oracle behind vartheta.
CNum complete_gauss_sum(const BigInt& p, const BigInt& q, const BigInt& L,
                        mpfr_prec_t precision);

// T(x, M) = (1/M') sum 2k e(k^2 x), M' = M(M+1), so T(integer) = 1.
CNum dirichlet_weighted_sum(const RationalAngle& x, const BigInt& M,
                            mpfr_prec_t precision);

// V(x, M) = (1/M'') sum k(1 - k^2/M^2) e(k^2 x), M'' = (M^2-1)/4, so
// V(integer) = 1; requires M >= 2.
CNum fejer_weighted_sum(const RationalAngle& x, const BigInt& M,
                        mpfr_prec_t precision);

// e(s/q) for s = 0..q-1. Correctly rounded entries for q <= 2^16.
std::vector<std::complex<double>> root_table(uint64_t q);

// Shared read-only tables for quadratic sums to a fixed modulus G:
// the G-th roots and, per residue a, the period q'(a) = G/gcd(a,G) and the
// one-period sum C(a) = sum_{t=1..q'(a)} e(t^2 a / G).
class ModulusTables {
 public:
  explicit ModulusTables(uint64_t G);

  uint64_t modulus() const { return G_; }
  uint64_t period(uint64_t a) const { return qprime_[a]; }
  std::complex<double> complete_sum(uint64_t a) const {
    return {csum_re_[a], csum_im_[a]};
  }
  const double* roots_re() const { return roots_re_.data(); }
  const double* roots_im() const { return roots_im_.data(); }

  // Partial sums P(len) = sum_{t=1..len} e(t^2 a / G) for each requested
  // length; lens must be ascending and <= period(a). Uses scratch for the
  // index buffer so concurrent callers pass distinct scratches.
  void prefix_sums(uint64_t a, const std::vector<uint32_t>& lens,
                   std::vector<uint32_t>& scratch,
                   std::complex<double>* out) const;

 private:
  uint64_t G_;
  std::vector<double> roots_re_, roots_im_;
  std::vector<uint32_t> qprime_;
  std::vector<double> csum_re_, csum_im_;
};

// Largest observed ratio of ||S(p/q,1,M)| - vartheta_1(q)| to
// sqrt(log q)/sqrt(M) + sqrt(q log q)/M over a sweep; the basis for the
// stored default envelope constant.
struct CalibrationResult {
  double max_ratio;
  uint64_t worst_q;
  uint64_t worst_M;
};
CalibrationResult calibrate_weyl_constant(uint64_t q_max,
                                          const std::vector<uint64_t>& Ms,
                                          uint64_t samples_per_q, uint64_t seed);

}  // namespace vdc
