#pragma once

// Inner-loop kernels behind ComplexMatrix arithmetic. A portable scalar set is
// always present and acts as the reference; SIMD sets are compiled per
// architecture and picked at runtime when the CPU supports them.
//
// Storage is interleaved (re, im) doubles, which is the layout of
// std::complex<double> arrays.

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace gamowlab::kernels {

using complex = std::complex<double>;

struct KernelSet {
  std::string_view name;

  /// c[m×n] = a[m×k] · b[k×n], all row-major. c must not alias a or b.
  void (*gemm)(const complex* a, const complex* b, complex* c, std::size_t m, std::size_t k,
               std::size_t n);

  /// Σ |x_i|² over n entries.
  double (*sum_sq)(const complex* x, std::size_t n);

  /// y_i += alpha · x_i over n entries.
  void (*axpy)(complex alpha, const complex* x, complex* y, std::size_t n);
};

const KernelSet& scalar();

/// Kernel sets compiled into this binary whose instructions the running CPU
/// supports, scalar first.
std::vector<const KernelSet*> available();

/// The set used by ComplexMatrix. Defaults to the widest available set; the
/// GAMOWLAB_KERNEL environment variable ("scalar", "avx2", "neon") overrides
/// it when that set is available.
const KernelSet& active();

/// Force a set by name. Returns false (and leaves the selection alone) when
/// the name is unknown or unsupported here. Not thread-safe against
/// concurrent arithmetic; call it at startup or from tests.
bool select(std::string_view name);

namespace detail {
const KernelSet* avx2_if_supported();
const KernelSet* neon_if_supported();
}  // namespace detail

}  // namespace gamowlab::kernels
