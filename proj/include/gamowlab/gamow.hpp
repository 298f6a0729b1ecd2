#pragma once

// The finite Gamow sector spanned by N resonances: 2N basis vectors
// (decaying D_j, growing G_j), the indefinite pairing (ψ|φ) = ⟨ψ|A|φ⟩, and
// two square roots B, C = B† of the metric A.
//
// Coordinates. Round kets are coordinate vectors: |ψ_j^D) ↦ e_{2j−1},
// |ψ_j^G) ↦ e_{2j} (1-based j, 0-based storage index 2j−2 and 2j−1). A round
// bra (ψ| acts as v ↦ ψ†·A·v, so the pairing is conjugate-linear in its left
// argument. The D/G pairings are real, so nothing in the pairing table
// depends on that choice, but complex combinations of Gamow vectors do.
// With this, the dyad |ψ_j^D)(ψ_j^G| is the unit matrix at (2j−1, 2j−1) and
// |ψ_j^G)(ψ_j^D| the unit matrix at (2j, 2j).

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include "gamowlab/cmatrix.hpp"

namespace gamowlab {

inline constexpr std::size_t kDefaultResonanceCap = 64;

/// A resonance pole pair z = E − iΓ/2, z* = E + iΓ/2 with Γ > 0.
class Resonance {
 public:
  Resonance(double energy, double width);

  double energy() const noexcept { return energy_; }
  double width() const noexcept { return width_; }
  complex pole() const noexcept { return {energy_, -0.5 * width_}; }
  complex conjugate_pole() const noexcept { return {energy_, 0.5 * width_}; }

 private:
  double energy_;
  double width_;
};

enum class GamowKind { decaying, growing };  // D, G

/// One basis vector: resonance index (1-based) and kind.
struct BasisSpec {
  std::size_t resonance = 1;
  GamowKind kind = GamowKind::decaying;
};

inline BasisSpec D(std::size_t j) { return {j, GamowKind::decaying}; }
inline BasisSpec G(std::size_t j) { return {j, GamowKind::growing}; }

class GamowSpace;
using GamowSpacePtr = std::shared_ptr<const GamowSpace>;

/// Immutable after construction; share it through GamowSpacePtr.
class GamowSpace {
 public:
  /// Builds A, B and C for 1 ≤ N ≤ cap resonances.
  static GamowSpacePtr create(std::vector<Resonance> resonances,
                              std::size_t cap = kDefaultResonanceCap);

  const std::vector<Resonance>& resonances() const noexcept { return resonances_; }
  std::size_t resonance_count() const noexcept { return resonances_.size(); }
  std::size_t dim() const noexcept { return 2 * resonances_.size(); }

  /// Block diagonal with 2×2 blocks [[0,1],[1,0]].
  const ComplexMatrix& metric() const noexcept { return metric_; }
  /// Blocks e^{−iπ/4}·(√2/2)·[[i,1],[1,i]]; root_b()² = metric().
  const ComplexMatrix& root_b() const noexcept { return root_b_; }
  /// adjoint(root_b()), the other square root.
  const ComplexMatrix& root_c() const noexcept { return root_c_; }

  /// 0-based storage index of a basis vector. Throws std::out_of_range.
  std::size_t index_of(BasisSpec spec) const;

  double min_width() const;

 private:
  explicit GamowSpace(std::vector<Resonance> resonances);

  std::vector<Resonance> resonances_;
  ComplexMatrix metric_;
  ComplexMatrix root_b_;
  ComplexMatrix root_c_;
};

/// (v|w) = v†·A·w for 2N-dimensional columns.
complex pseudo_product(const GamowSpace& space, const ComplexMatrix& v, const ComplexMatrix& w);

/// Coordinate column of |ψ_j^D) or |ψ_j^G).
ComplexMatrix basis_vector(const GamowSpace& space, BasisSpec spec);

/// Matrix of |left)(right|, i.e. v ↦ |left)·(right|v).
ComplexMatrix dyad(const GamowSpace& space, BasisSpec left, BasisSpec right);

/// A·M†·A, the adjoint with respect to the pseudometric. M is
/// pseudo-Hermitian when pseudo_adjoint(M) == M.
ComplexMatrix pseudo_adjoint(const GamowSpace& space, const ComplexMatrix& m);

// Angular (ordinary Hilbert-space) representatives tied to the round vectors
// through the roots: B|ψ_j^D⟩ = |ψ_j^D), ⟨ψ_j^G|B = (ψ_j^G|,
// C|ψ_j^G⟩ = |ψ_j^G), ⟨ψ_j^D|C = (ψ_j^D|. Inverses use B⁻¹ = B·A and
// C⁻¹ = C·A, which follow from B² = C² = A and A² = I.

/// Column |ψ_j^D⟩ or |ψ_j^G⟩.
ComplexMatrix angular_ket(const GamowSpace& space, BasisSpec spec);
/// Row ⟨ψ_j^G| or ⟨ψ_j^D|.
ComplexMatrix angular_bra(const GamowSpace& space, BasisSpec spec);

/// |left⟩⟨right| from the angular representatives above.
ComplexMatrix angular_dyad(const GamowSpace& space, BasisSpec left, BasisSpec right);

}  // namespace gamowlab
