#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

namespace vdc::kernels {

struct Sum2 {
  double re = 0.0;
  double im = 0.0;
};

// Kernel function table. Scalar implementations are the reference; the AVX2
// variants must agree with them up to summation-order rounding.
struct Ops {
  // sum of tab[idx[i]] over i < n, table split into re/im planes
  Sum2 (*sum_gather)(const double* tab_re, const double* tab_im,
                     const uint32_t* idx, size_t n);
  // sum of w[i] * tab[idx[i]] with real weights
  Sum2 (*dot_gather)(const double* w, const double* tab_re, const double* tab_im,
                     const uint32_t* idx, size_t n);
  // sum of (f_re[i] + i f_im[i]) * tab[idx[i]]
  Sum2 (*cdot_gather)(const double* f_re, const double* f_im,
                      const double* tab_re, const double* tab_im,
                      const uint32_t* idx, size_t n);
  // y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, size_t n);
  // index of the minimum element (first one on ties)
  size_t (*argmin)(const double* x, size_t n);
};

enum class Isa { scalar, avx2 };

// Active implementation: AVX2 when the CPU supports it, unless overridden by
// force_isa() or the VDC_KERNELS environment variable (values: scalar, avx2).
const Ops& active();
Isa active_isa();
void force_isa(Isa isa);
std::string isa_name(Isa isa);

const Ops& scalar_ops();
const Ops& avx2_ops();   // valid to call only if avx2_available()
bool avx2_available();

}  // namespace vdc::kernels
