// Compiled with -mavx2 -mfma. Nothing in here may run before the CPU check in
// avx2_if_supported() has passed.

#include <immintrin.h>

#include "gamowlab/kernels.hpp"

namespace gamowlab::kernels {
namespace {

// Two complex<double> per __m256d: (re0, im0, re1, im1).
inline __m256d cmul_bcast(__m256d ar, __m256d ai, __m256d b) {
  const __m256d bswap = _mm256_permute_pd(b, 0b0101);  // (im0, re0, im1, re1)
  // even lanes: ar*br - ai*bi, odd lanes: ar*bi + ai*br
  return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bswap));
}

void gemm_avx2(const complex* a, const complex* b, complex* c, std::size_t m, std::size_t k,
               std::size_t n) {
  const std::size_t n2 = n & ~std::size_t{1};
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = reinterpret_cast<double*>(c + i * n);
    for (std::size_t j = 0; j < 2 * n; ++j) crow[j] = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      const complex av = a[i * k + p];
      const __m256d ar = _mm256_set1_pd(av.real());
      const __m256d ai = _mm256_set1_pd(av.imag());
      const double* brow = reinterpret_cast<const double*>(b + p * n);
      std::size_t j = 0;
      for (; j < n2; j += 2) {
        const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        const __m256d cv = _mm256_loadu_pd(crow + 2 * j);
        _mm256_storeu_pd(crow + 2 * j, _mm256_add_pd(cv, cmul_bcast(ar, ai, bv)));
      }
      for (; j < n; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        crow[2 * j] += av.real() * br - av.imag() * bi;
        crow[2 * j + 1] += av.real() * bi + av.imag() * br;
      }
    }
  }
}

double sum_sq_avx2(const complex* x, std::size_t n) {
  const double* d = reinterpret_cast<const double*>(x);
  const std::size_t len = 2 * n;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256d v0 = _mm256_loadu_pd(d + i);
    const __m256d v1 = _mm256_loadu_pd(d + i + 4);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  for (; i + 4 <= len; i += 4) {
    const __m256d v = _mm256_loadu_pd(d + i);
    acc0 = _mm256_fmadd_pd(v, v, acc0);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < len; ++i) s += d[i] * d[i];
  return s;
}

void axpy_avx2(complex alpha, const complex* x, complex* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * j);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * j);
    _mm256_storeu_pd(yd + 2 * j, _mm256_add_pd(yv, cmul_bcast(ar, ai, xv)));
  }
  for (; j < n; ++j) y[j] += alpha * x[j];
}

constexpr KernelSet kAvx2{"avx2", gemm_avx2, sum_sq_avx2, axpy_avx2};

}  // namespace

namespace detail {
const KernelSet* avx2_if_supported() {
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &kAvx2;
  return nullptr;
}
}  // namespace detail

}  // namespace gamowlab::kernels
