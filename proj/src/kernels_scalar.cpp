#include "gamowlab/kernels.hpp"

namespace gamowlab::kernels {
namespace {

void gemm_scalar(const complex* a, const complex* b, complex* c, std::size_t m, std::size_t k,
                 std::size_t n) {
  for (std::size_t i = 0; i < m * n; ++i) c[i] = complex{};
  // i-k-j order keeps the b and c accesses contiguous.
  for (std::size_t i = 0; i < m; ++i) {
    complex* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double ar = a[i * k + p].real();
      const double ai = a[i * k + p].imag();
      const complex* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[j].real();
        const double bi = brow[j].imag();
        crow[j] += complex{ar * br - ai * bi, ar * bi + ai * br};
      }
    }
  }
}

double sum_sq_scalar(const complex* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

void axpy_scalar(complex alpha, const complex* x, complex* y, std::size_t n) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] += complex{ar * xr - ai * xi, ar * xi + ai * xr};
  }
}

constexpr KernelSet kScalar{"scalar", gemm_scalar, sum_sq_scalar, axpy_scalar};

}  // namespace

const KernelSet& scalar() { return kScalar; }

}  // namespace gamowlab::kernels
