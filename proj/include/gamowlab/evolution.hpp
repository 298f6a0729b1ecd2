#pragma once

// Time evolution on the Gamow sector (ħ = 1). Three operator families,
// all diagonal in the round-ket coordinates:
//
//   semigroup_d  U(t) = Σ_j e^{−itz_j} |ψ_j^D)(ψ_j^G|
//   invertible   U(t) = Σ_j e^{−itz_j} |ψ_j^D)(ψ_j^G| + e^{−itz_j*} |ψ_j^G)(ψ_j^D|
//   hermitian    U(t) = Σ_j e^{−itz_j} |ψ_j^D)(ψ_j^G| + e^{+itz_j*} |ψ_j^G)(ψ_j^D|
//
// The hermitian family is pseudo-Hermitian (A·U†·A = U) and satisfies
// U·U† = diag(e^{−tΓ_j}); it is not self-adjoint as a matrix unless
// e^{−2itE_j} = 1.

#include <string_view>

#include "gamowlab/cmatrix.hpp"
#include "gamowlab/gamow.hpp"

namespace gamowlab {

enum class EvolutionVariant { semigroup_d, invertible, hermitian };

std::string_view to_string(EvolutionVariant v);
/// Accepts "semigroup_d", "invertible", "hermitian". Throws std::invalid_argument.
EvolutionVariant parse_variant(std::string_view name);

enum class HamiltonianKind { effective, full_hermitian };

struct GamowHamiltonian {
  GamowSpacePtr space;
  HamiltonianKind kind;
  ComplexMatrix mat;
};

/// effective: z_j on D slots, 0 on G slots.
/// full_hermitian: z_j on D slots, z_j* on G slots (pseudo-Hermitian).
GamowHamiltonian hamiltonian(const GamowSpacePtr& space, HamiltonianKind kind);

/// d/dt U(t) at t = 0 is −i times this matrix. For semigroup_d and
/// invertible it is the effective and full_hermitian Hamiltonian; for the
/// hermitian family it is diag(z_j, −z_j*).
ComplexMatrix generator(const GamowSpace& space, EvolutionVariant variant);

struct EvolutionOperator {
  GamowSpacePtr space;
  double t = 0.0;
  EvolutionVariant variant = EvolutionVariant::hermitian;
  ComplexMatrix mat;
};

/// Throws std::invalid_argument for non-finite t.
EvolutionOperator evolution_operator(const GamowSpacePtr& space, double t, EvolutionVariant variant);

/// Raised when an operation is not defined for the operator's variant.
class VariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// U(−t) for the invertible family, which is its exact inverse. The
/// semigroup family is singular and the hermitian family does not satisfy
/// U(t)⁻¹ = U(−t); both throw VariantError.
EvolutionOperator inverse(const EvolutionOperator& op);

struct SquareLaw {
  ComplexMatrix square;     ///< U(t)·U(t)
  ComplexMatrix predicted;  ///< diag with e^{−tΓ_j} on both slots of resonance j
  ComplexMatrix gram;       ///< U(t)·U(t)†
};

/// Hermitian-family square. gram equals predicted for every t and E_j;
/// square equals predicted only where e^{−2itE_j} = 1 (E_j = 0 in practice).
SquareLaw hermitian_square_law(const GamowSpacePtr& space, double t);

/// Heisenberg picture of obs under op:
///   invertible  U(t)·O·U(−t)
///   hermitian   U(t)†·O·U(t)
///   semigroup_d U(t)·O·U(t)†  (an extrapolation: no conjugation rule is
///                              modelled for this family; see conjugation_is_modelled)
ComplexMatrix heisenberg_evolve(const EvolutionOperator& op, const ComplexMatrix& obs);

/// False for semigroup_d, whose conjugation rule is an extrapolation.
bool conjugation_is_modelled(EvolutionVariant variant);

/// Time-asymmetric validity of the Gamow evolution rules. Decaying vectors
/// evolve for t ≥ 0. Growing vectors follow the raw rule for t ≤ 0; after the
/// −t ↦ t conversion the forward rule holds for t ≥ 0.
struct TaqmValidity {
  bool raw = false;
  bool converted = false;
};
TaqmValidity taqm_validity(GamowKind kind, double t);

/// B·[Σ_j e^{−itz_j} |ψ_j^D⟩⟨ψ_j^G|]·B with angular dyads; reproduces the
/// semigroup_d matrix.
ComplexMatrix semigroup_from_roots(const GamowSpace& space, double t);

/// B·[Σ z_j |ψ_j^D⟩⟨ψ_j^G|]·B + C·[Σ z_j* |ψ_j^G⟩⟨ψ_j^D|]·C, to be compared
/// with the full_hermitian Hamiltonian.
ComplexMatrix hamiltonian_from_roots(const GamowSpace& space);

}  // namespace gamowlab
