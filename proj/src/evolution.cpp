#include "gamowlab/evolution.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace gamowlab {
namespace {

constexpr complex kI{0.0, 1.0};

// Diagonal entries (D slot, G slot) of each family at time t.
std::vector<complex> evolution_diagonal(const GamowSpace& space, double t, EvolutionVariant variant) {
  std::vector<complex> d;
  d.reserve(space.dim());
  for (const auto& r : space.resonances()) {
    const complex z = r.pole();
    const complex zc = r.conjugate_pole();
    d.push_back(std::exp(-kI * t * z));
    switch (variant) {
      case EvolutionVariant::semigroup_d: d.push_back(0.0); break;
      case EvolutionVariant::invertible: d.push_back(std::exp(-kI * t * zc)); break;
      case EvolutionVariant::hermitian: d.push_back(std::exp(kI * t * zc)); break;
    }
  }
  return d;
}

void require_operator_shape(const GamowSpace& space, const ComplexMatrix& m, const char* op) {
  if (m.rows() != space.dim() || m.cols() != space.dim()) {
    throw DimensionError(std::string(op) + ": operand is " + m.shape_string() + ", space is " +
                         std::to_string(space.dim()) + "-dimensional");
  }
}

}  // namespace

std::string_view to_string(EvolutionVariant v) {
  switch (v) {
    case EvolutionVariant::semigroup_d: return "semigroup_d";
    case EvolutionVariant::invertible: return "invertible";
    case EvolutionVariant::hermitian: return "hermitian";
  }
  return "?";
}

EvolutionVariant parse_variant(std::string_view name) {
  if (name == "semigroup_d") return EvolutionVariant::semigroup_d;
  if (name == "invertible") return EvolutionVariant::invertible;
  if (name == "hermitian") return EvolutionVariant::hermitian;
  throw std::invalid_argument("unknown evolution variant '" + std::string(name) +
                              "' (expected semigroup_d, invertible or hermitian)");
}

GamowHamiltonian hamiltonian(const GamowSpacePtr& space, HamiltonianKind kind) {
  std::vector<complex> d;
  for (const auto& r : space->resonances()) {
    d.push_back(r.pole());
    d.push_back(kind == HamiltonianKind::effective ? complex{} : r.conjugate_pole());
  }
  return {space, kind, ComplexMatrix::diagonal(d)};
}

ComplexMatrix generator(const GamowSpace& space, EvolutionVariant variant) {
  std::vector<complex> d;
  for (const auto& r : space.resonances()) {
    d.push_back(r.pole());
    switch (variant) {
      case EvolutionVariant::semigroup_d: d.push_back(0.0); break;
      case EvolutionVariant::invertible: d.push_back(r.conjugate_pole()); break;
      case EvolutionVariant::hermitian: d.push_back(-r.conjugate_pole()); break;
    }
  }
  return ComplexMatrix::diagonal(d);
}

EvolutionOperator evolution_operator(const GamowSpacePtr& space, double t, EvolutionVariant variant) {
  if (!std::isfinite(t)) throw std::invalid_argument("evolution_operator: t must be finite");
  return {space, t, variant, ComplexMatrix::diagonal(evolution_diagonal(*space, t, variant))};
}

EvolutionOperator inverse(const EvolutionOperator& op) {
  if (op.variant != EvolutionVariant::invertible) {
    throw VariantError("inverse: only the invertible family has U(t)^-1 = U(-t); got " +
                       std::string(to_string(op.variant)));
  }
  return evolution_operator(op.space, -op.t, op.variant);
}

SquareLaw hermitian_square_law(const GamowSpacePtr& space, double t) {
  const auto u = evolution_operator(space, t, EvolutionVariant::hermitian);
  std::vector<complex> predicted;
  for (const auto& r : space->resonances()) {
    const double f = std::exp(-t * r.width());
    predicted.push_back(f);
    predicted.push_back(f);
  }
  return {mul(u.mat, u.mat), ComplexMatrix::diagonal(predicted), mul(u.mat, adjoint(u.mat))};
}

ComplexMatrix heisenberg_evolve(const EvolutionOperator& op, const ComplexMatrix& obs) {
  require_operator_shape(*op.space, obs, "heisenberg_evolve");
  switch (op.variant) {
    case EvolutionVariant::invertible: return mul(op.mat, obs, inverse(op).mat);
    case EvolutionVariant::hermitian: return mul(adjoint(op.mat), obs, op.mat);
    case EvolutionVariant::semigroup_d: return mul(op.mat, obs, adjoint(op.mat));
  }
  throw VariantError("heisenberg_evolve: unknown variant");
}

bool conjugation_is_modelled(EvolutionVariant variant) {
  return variant != EvolutionVariant::semigroup_d;
}

TaqmValidity taqm_validity(GamowKind kind, double t) {
  if (kind == GamowKind::decaying) return {t >= 0.0, t >= 0.0};
  return {t <= 0.0, t >= 0.0};
}

ComplexMatrix semigroup_from_roots(const GamowSpace& space, double t) {
  ComplexMatrix inner(space.dim(), space.dim());
  for (std::size_t j = 1; j <= space.resonance_count(); ++j) {
    const complex z = space.resonances()[j - 1].pole();
    inner += angular_dyad(space, D(j), G(j)) * std::exp(-kI * t * z);
  }
  return mul(space.root_b(), inner, space.root_b());
}

ComplexMatrix hamiltonian_from_roots(const GamowSpace& space) {
  ComplexMatrix decaying(space.dim(), space.dim());
  ComplexMatrix growing(space.dim(), space.dim());
  for (std::size_t j = 1; j <= space.resonance_count(); ++j) {
    const auto& r = space.resonances()[j - 1];
    decaying += angular_dyad(space, D(j), G(j)) * r.pole();
    growing += angular_dyad(space, G(j), D(j)) * r.conjugate_pole();
  }
  return mul(space.root_b(), decaying, space.root_b()) + mul(space.root_c(), growing, space.root_c());
}

}  // namespace gamowlab
