#include "vdc/kernels.hpp"

namespace vdc::kernels {

namespace {

Sum2 sum_gather_scalar(const double* tab_re, const double* tab_im,
                       const uint32_t* idx, size_t n) {
  double re = 0.0, im = 0.0;
  for (size_t i = 0; i < n; ++i) {
    re += tab_re[idx[i]];
    im += tab_im[idx[i]];
  }
  return {re, im};
}

Sum2 dot_gather_scalar(const double* w, const double* tab_re,
                       const double* tab_im, const uint32_t* idx, size_t n) {
  double re = 0.0, im = 0.0;
  for (size_t i = 0; i < n; ++i) {
    re += w[i] * tab_re[idx[i]];
    im += w[i] * tab_im[idx[i]];
  }
  return {re, im};
}

Sum2 cdot_gather_scalar(const double* f_re, const double* f_im,
                        const double* tab_re, const double* tab_im,
                        const uint32_t* idx, size_t n) {
  double re = 0.0, im = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double tr = tab_re[idx[i]], ti = tab_im[idx[i]];
    re += f_re[i] * tr - f_im[i] * ti;
    im += f_re[i] * ti + f_im[i] * tr;
  }
  return {re, im};
}

void axpy_scalar(double a, const double* x, double* y, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

size_t argmin_scalar(const double* x, size_t n) {
  size_t best = 0;
  for (size_t i = 1; i < n; ++i)
    if (x[i] < x[best]) best = i;
  return best;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{sum_gather_scalar, dot_gather_scalar, cdot_gather_scalar,
                       axpy_scalar, argmin_scalar};
  return ops;
}

}  // namespace vdc::kernels
