#pragma once

// Commutator trajectories [O1(t), O2(t)] under Gamow-sector evolution: decay
// envelope fits, the per-resonance diagonal ansatz, the single-resonance
// phase law, commutation times, and the growth witness that rules out the
// invertible family.

#include <optional>
#include <stdexcept>
#include <vector>

#include "gamowlab/cmatrix.hpp"
#include "gamowlab/evolution.hpp"
#include "gamowlab/gamow.hpp"

namespace gamowlab {

/// Norms at or below this are treated as underflowed and left out of fits.
inline constexpr double kUnderflowFloor = 1e-280;

struct CommutatorTrajectory {
  GamowSpacePtr space;
  EvolutionVariant variant = EvolutionVariant::hermitian;
  std::vector<double> times;
  std::vector<ComplexMatrix> values;  ///< [O1(t_k), O2(t_k)]
  std::vector<double> norms;          ///< Frobenius norms of values
};

/// Times must be non-empty and strictly increasing; O1, O2 must be 2N×2N.
CommutatorTrajectory trajectory(const GamowSpacePtr& space, const ComplexMatrix& o1,
                                const ComplexMatrix& o2, const std::vector<double>& times,
                                EvolutionVariant variant = EvolutionVariant::hermitian);

struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_abs_residual = 0.0;
  std::size_t n_points = 0;
};

/// No usable (above-floor) points in the fit window.
class EmptyFitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default fit window: the whole grid for one resonance, the last half
/// otherwise so the slowest mode dominates.
double default_window_fraction(const GamowSpace& space);

/// Least-squares line through (t, ln norm) over the last `window_fraction`
/// of the grid (fraction in (0, 1]). Points at or below kUnderflowFloor are
/// skipped; fewer than two usable points raise EmptyFitError.
DecayFit envelope_fit(const CommutatorTrajectory& traj, std::optional<double> window_fraction = {});

/// Coefficients of the diagonal ansatz
///   [O1(t), O2(t)] ≈ Σ_j e^{−2tΓ_j} (α_j |ψ_j^D)(ψ_j^G| + β_j |ψ_j^G)(ψ_j^D|)
/// and the relative Frobenius distance of the exact commutator from that
/// form (0 when the commutator has underflowed).
struct AnsatzReport {
  std::vector<complex> alpha;
  std::vector<complex> beta;
  double residual = 0.0;
};

AnsatzReport ansatz_report(const CommutatorTrajectory& traj, std::size_t k);

/// Diagnostics for the one-resonance phase law: |α|, |β| constant and
/// arg α advancing at angular rate −2E.
struct PhaseLawReport {
  double alpha_modulus_spread = 0.0;  ///< max − min of |α(t)|
  double beta_modulus_spread = 0.0;
  double max_phase_error = 0.0;       ///< worst |arg α(t) − arg α(t0) + 2E(t − t0)| mod 2π
  double measured_rate = 0.0;         ///< (arg α(t_last) − arg α(t0)) / (t_last − t0), unwrapped
  bool holds = false;
};

/// Requires a one-resonance space (std::invalid_argument otherwise).
PhaseLawReport phase_law(const CommutatorTrajectory& traj);

/// phase_law(traj).holds with tolerances 1e-9 (moduli) and 1e-6 (phase).
bool phase_constancy_check(const CommutatorTrajectory& traj);

/// First grid time k·dt ≤ t_max at which ‖[O1(t), O2(t)]‖ < eps, if any.
std::optional<double> commutation_time(const GamowSpacePtr& space, const ComplexMatrix& o1,
                                       const ComplexMatrix& o2, double eps,
                                       EvolutionVariant variant, double t_max, double dt);

/// max(0, ln(‖K‖/eps) / (2Γ)), the one-resonance closed form.
double predicted_commutation_time(double commutator_norm, double eps, double width);

/// The (2,1) entry of O(t) under the invertible family divided by the same
/// entry of O, in modulus. Equals e^{tΓ}. One resonance only; t ≥ 0.
class UndefinedWitnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
double growth_witness(const GamowSpacePtr& space, const ComplexMatrix& obs, double t);

}  // namespace gamowlab
