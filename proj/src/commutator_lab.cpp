#include "gamowlab/commutator_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gamowlab/linalg.hpp"

namespace gamowlab {
namespace {

double wrap_phase(double x) {
  return std::remainder(x, 2.0 * std::numbers::pi);
}

}  // namespace

CommutatorTrajectory trajectory(const GamowSpacePtr& space, const ComplexMatrix& o1,
                                const ComplexMatrix& o2, const std::vector<double>& times,
                                EvolutionVariant variant) {
  if (times.empty()) throw std::invalid_argument("trajectory: empty time grid");
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] > times[k - 1])) throw std::invalid_argument("trajectory: times must be strictly increasing");
  }
  for (const auto* o : {&o1, &o2}) {
    if (o->rows() != space->dim() || o->cols() != space->dim()) {
      throw DimensionError("trajectory: observable is " + o->shape_string() + ", space is " +
                           std::to_string(space->dim()) + "-dimensional");
    }
  }
  CommutatorTrajectory traj{space, variant, times, {}, {}};
  traj.values.reserve(times.size());
  traj.norms.reserve(times.size());
  for (double t : times) {
    const auto u = evolution_operator(space, t, variant);
    traj.values.push_back(commutator(heisenberg_evolve(u, o1), heisenberg_evolve(u, o2)));
    traj.norms.push_back(frobenius_norm(traj.values.back()));
  }
  return traj;
}

double default_window_fraction(const GamowSpace& space) {
  return space.resonance_count() == 1 ? 1.0 : 0.5;
}

DecayFit envelope_fit(const CommutatorTrajectory& traj, std::optional<double> window_fraction) {
  const double fraction = window_fraction.value_or(default_window_fraction(*traj.space));
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw std::invalid_argument("envelope_fit: window fraction must lie in (0, 1]");
  }
  const std::size_t n = traj.times.size();
  const auto window = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n)));
  const std::size_t first = n - std::min(n, std::max<std::size_t>(window, 1));

  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t k = first; k < n; ++k) {
    if (traj.norms[k] > kUnderflowFloor) {
      xs.push_back(traj.times[k]);
      ys.push_back(std::log(traj.norms[k]));
    }
  }
  if (xs.size() < 2) {
    throw EmptyFitError("envelope_fit: " + std::to_string(xs.size()) +
                        " usable point(s) above the underflow floor; need 2");
  }
  const LineFit line = fit_line(xs, ys);
  return {line.slope, line.intercept, line.max_abs_residual, xs.size()};
}

AnsatzReport ansatz_report(const CommutatorTrajectory& traj, std::size_t k) {
  if (k >= traj.values.size()) throw std::out_of_range("ansatz_report: time index out of range");
  const GamowSpace& space = *traj.space;
  const ComplexMatrix& c = traj.values[k];
  const double t = traj.times[k];

  AnsatzReport report;
  ComplexMatrix off_diagonal = c;
  for (std::size_t j = 0; j < space.resonance_count(); ++j) {
    const double undo = std::exp(2.0 * t * space.resonances()[j].width());
    report.alpha.push_back(c(2 * j, 2 * j) * undo);
    report.beta.push_back(c(2 * j + 1, 2 * j + 1) * undo);
    off_diagonal(2 * j, 2 * j) = 0.0;
    off_diagonal(2 * j + 1, 2 * j + 1) = 0.0;
  }
  const double total = traj.norms[k];
  report.residual = total > kUnderflowFloor ? std::min(1.0, frobenius_norm(off_diagonal) / total) : 0.0;
  return report;
}

PhaseLawReport phase_law(const CommutatorTrajectory& traj) {
  if (traj.space->resonance_count() != 1) {
    throw std::invalid_argument("phase_law: stated for one resonance only, space has " +
                                std::to_string(traj.space->resonance_count()));
  }
  const double energy = traj.space->resonances().front().energy();
  PhaseLawReport r;
  double a_min = INFINITY, a_max = 0.0, b_min = INFINITY, b_max = 0.0;
  complex alpha0{};
  double unwrapped = 0.0;
  double prev_arg = 0.0;
  for (std::size_t k = 0; k < traj.values.size(); ++k) {
    const auto rep = ansatz_report(traj, k);
    const complex a = rep.alpha.front();
    const complex b = rep.beta.front();
    a_min = std::min(a_min, std::abs(a));
    a_max = std::max(a_max, std::abs(a));
    b_min = std::min(b_min, std::abs(b));
    b_max = std::max(b_max, std::abs(b));
    if (k == 0) {
      alpha0 = a;
      prev_arg = std::arg(a);
      continue;
    }
    if (std::abs(alpha0) == 0.0 || std::abs(a) == 0.0) continue;  // phase undefined
    const double dt = traj.times[k] - traj.times[0];
    r.max_phase_error = std::max(r.max_phase_error, std::abs(wrap_phase(std::arg(a / alpha0) + 2.0 * energy * dt)));
    unwrapped += wrap_phase(std::arg(a) - prev_arg);
    prev_arg = std::arg(a);
  }
  if (traj.times.size() > 1) r.measured_rate = unwrapped / (traj.times.back() - traj.times.front());
  r.alpha_modulus_spread = a_max - a_min;
  r.beta_modulus_spread = b_max - b_min;
  const double scale_a = std::max(1.0, a_max);
  const double scale_b = std::max(1.0, b_max);
  r.holds = r.alpha_modulus_spread <= 1e-9 * scale_a && r.beta_modulus_spread <= 1e-9 * scale_b &&
            r.max_phase_error <= 1e-6;
  return r;
}

bool phase_constancy_check(const CommutatorTrajectory& traj) { return phase_law(traj).holds; }

std::optional<double> commutation_time(const GamowSpacePtr& space, const ComplexMatrix& o1,
                                       const ComplexMatrix& o2, double eps,
                                       EvolutionVariant variant, double t_max, double dt) {
  if (!(eps > 0.0)) throw std::invalid_argument("commutation_time: eps must be > 0");
  if (!(dt > 0.0) || !(t_max > 0.0)) throw std::invalid_argument("commutation_time: dt and t_max must be > 0");
  const auto steps = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    const auto u = evolution_operator(space, t, variant);
    if (frobenius_norm(commutator(heisenberg_evolve(u, o1), heisenberg_evolve(u, o2))) < eps) return t;
  }
  return std::nullopt;
}

double predicted_commutation_time(double commutator_norm, double eps, double width) {
  if (commutator_norm <= eps) return 0.0;
  return std::log(commutator_norm / eps) / (2.0 * width);
}

double growth_witness(const GamowSpacePtr& space, const ComplexMatrix& obs, double t) {
  if (space->resonance_count() != 1) throw std::invalid_argument("growth_witness: one resonance only");
  if (!(t >= 0.0)) throw std::invalid_argument("growth_witness: t must be >= 0");
  if (obs.rows() != 2 || obs.cols() != 2) throw DimensionError("growth_witness: observable is " + obs.shape_string());
  const double reference = std::abs(obs(1, 0));
  if (reference == 0.0) throw UndefinedWitnessError("growth_witness: the (2,1) entry of the observable is zero");
  const auto u = evolution_operator(space, t, EvolutionVariant::invertible);
  return std::abs(heisenberg_evolve(u, obs)(1, 0)) / reference;
}

}  // namespace gamowlab
