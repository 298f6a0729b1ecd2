// aarch64 only; Advanced SIMD is part of the base ISA there, so no runtime
// probe is needed.

#include <arm_neon.h>

#include "gamowlab/kernels.hpp"

namespace gamowlab::kernels {
namespace {

// One complex<double> per float64x2_t: (re, im).
inline float64x2_t cmul(float64x2_t a, float64x2_t b) {
  const float64x2_t ar = vdupq_laneq_f64(a, 0);
  const float64x2_t ai = vdupq_laneq_f64(a, 1);
  const float64x2_t bswap = vextq_f64(b, b, 1);  // (im, re)
  const float64x2_t sign = {-1.0, 1.0};
  return vfmaq_f64(vmulq_f64(ar, b), vmulq_f64(ai, bswap), sign);
}

void gemm_neon(const complex* a, const complex* b, complex* c, std::size_t m, std::size_t k,
               std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = reinterpret_cast<double*>(c + i * n);
    for (std::size_t j = 0; j < 2 * n; ++j) crow[j] = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      const float64x2_t av = vld1q_f64(reinterpret_cast<const double*>(a + i * k + p));
      const double* brow = reinterpret_cast<const double*>(b + p * n);
      for (std::size_t j = 0; j < n; ++j) {
        const float64x2_t bv = vld1q_f64(brow + 2 * j);
        vst1q_f64(crow + 2 * j, vaddq_f64(vld1q_f64(crow + 2 * j), cmul(av, bv)));
      }
    }
  }
}

double sum_sq_neon(const complex* x, std::size_t n) {
  const double* d = reinterpret_cast<const double*>(x);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t v = vld1q_f64(d + 2 * i);
    acc = vfmaq_f64(acc, v, v);
  }
  return vaddvq_f64(acc);
}

void axpy_neon(complex alpha, const complex* x, complex* y, std::size_t n) {
  const float64x2_t av = {alpha.real(), alpha.imag()};
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  for (std::size_t j = 0; j < n; ++j) {
    vst1q_f64(yd + 2 * j, vaddq_f64(vld1q_f64(yd + 2 * j), cmul(av, vld1q_f64(xd + 2 * j))));
  }
}

constexpr KernelSet kNeon{"neon", gemm_neon, sum_sq_neon, axpy_neon};

}  // namespace

namespace detail {
const KernelSet* neon_if_supported() { return &kNeon; }
}  // namespace detail

}  // namespace gamowlab::kernels
