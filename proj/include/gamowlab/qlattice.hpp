#pragma once

// Lattice of orthogonal projectors on C^d: meet (range intersection), join
// (closed span), orthocomplement, and the distributive inequalities that
// separate quantum from Boolean lattices.

#include <cstddef>
#include <vector>

#include "gamowlab/cmatrix.hpp"

namespace gamowlab {

/// Singular values at or below this count as zero in subspace computations.
inline constexpr double kRankCutoff = 1e-10;
/// Tolerance for lattice equalities and containments.
inline constexpr double kLatticeTol = 1e-9;

/// Orthogonal projector: Hermitian to 1e-12 and idempotent to 1e-10.
class Projector {
 public:
  explicit Projector(ComplexMatrix mat);

  static Projector zero(std::size_t dim);
  static Projector identity(std::size_t dim);
  /// Projector onto the span of the columns of `vectors` (need not be
  /// orthonormal; rank is decided with kRankCutoff).
  static Projector onto(const ComplexMatrix& vectors);

  const ComplexMatrix& mat() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.rows(); }
  /// Rounded trace.
  std::size_t rank() const;

 private:
  ComplexMatrix mat_;
};

Projector meet(const Projector& p, const Projector& q);
Projector join(const Projector& p, const Projector& q);
Projector ortho(const Projector& p);

/// range(p) ⊆ range(q), tested as meet(p, q) == p within kLatticeTol.
bool leq(const Projector& p, const Projector& q);

/// ‖p − q‖_F ≤ kLatticeTol.
bool lattice_equal(const Projector& p, const Projector& q);

struct DistributivityReport {
  Projector lhs_meet;  ///< a ∧ (b ∨ c)
  Projector rhs_meet;  ///< (a ∧ b) ∨ (a ∧ c)
  Projector lhs_join;  ///< a ∨ (b ∧ c)
  Projector rhs_join;  ///< (a ∨ b) ∧ (a ∨ c)
  bool meet_equal = false;
  bool join_equal = false;
  /// rhs_meet ≤ lhs_meet and lhs_join ≤ rhs_join. Always true in an
  /// orthocomplemented lattice; false means a rank decision went wrong.
  bool inequality_holds = false;
};

DistributivityReport distributivity_check(const Projector& a, const Projector& b, const Projector& c);

/// ‖[p, q]‖_F ≤ 1e-10.
bool compatible(const Projector& p, const Projector& q);

struct AbelianCertificate {
  bool abelian = true;
  std::size_t worst_i = 0;  ///< indices of the pair with the largest commutator norm
  std::size_t worst_j = 0;
  double worst_norm = 0.0;
};

/// All pairwise commutator norms ≤ tol. Throws on an empty list or mixed
/// dimensions.
AbelianCertificate abelian_certificate(const std::vector<ComplexMatrix>& observables, double tol);

}  // namespace gamowlab
