#pragma once

// Quantum operations in Kraus form, in the Schrödinger picture (acting on
// density matrices) and in the dual Heisenberg picture (acting on
// observables), plus the qubit amplitude-damping channel.

#include <cstddef>
#include <vector>

#include "gamowlab/cmatrix.hpp"

namespace gamowlab {

/// Completeness tolerance: ‖Σ E†E − I‖_F.
inline constexpr double kCompletenessTol = 1e-12;

/// A trace-preserving map ρ ↦ Σ_μ E_μ ρ E_μ†. Construction checks that all
/// Kraus operators are dim×dim and that Σ E_μ†E_μ = I.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> kraus);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }

  /// ‖Σ E_μ†E_μ − I‖_F; at most kCompletenessTol for any constructed channel.
  double completeness_defect() const;

 private:
  std::size_t dim_ = 0;
  std::vector<ComplexMatrix> kraus_;
};

/// Hermitian, unit trace, smallest eigenvalue ≥ −1e-10.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix mat);
  const ComplexMatrix& mat() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

/// E₀ = [[1,0],[0,√(1−p)]], E₁ = [[0,√p],[0,0]]. Throws for p ∉ [0,1].
KrausChannel damping_channel(double p);

/// Σ_μ E_μ ρ E_μ†. A result that breaks the density-matrix invariants is
/// reported as std::runtime_error (the channel was malformed).
DensityMatrix apply_schrodinger(const KrausChannel& ch, const DensityMatrix& rho);

/// Σ_μ E_μ† O E_μ. For Hermitian inputs, an anti-Hermitian drift above 1e-14
/// is removed by taking the Hermitian part.
ComplexMatrix apply_heisenberg(const KrausChannel& ch, const ComplexMatrix& obs);

/// n-fold apply_heisenberg; n = 0 returns obs.
ComplexMatrix iterate_heisenberg(const KrausChannel& ch, const ComplexMatrix& obs, std::size_t n);

/// Closed form of n damping steps on a 2×2 observable:
///   [[O00, (1−p)^{n/2} O01], [(1−p)^{n/2} O10, (1−p)^n O11 + O00 (1 − (1−p)^n)]].
ComplexMatrix damping_closed_form(double p, std::size_t n, const ComplexMatrix& obs);

/// O00·I, the n → ∞ limit of iterated damping. Only a limit for p > 0: at
/// p = 0 the channel is the identity.
ComplexMatrix damping_limit(const ComplexMatrix& obs);

}  // namespace gamowlab
