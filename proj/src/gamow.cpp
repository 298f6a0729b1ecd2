#include "gamowlab/gamow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gamowlab {
namespace {

void require_column(const GamowSpace& space, const ComplexMatrix& v, const char* op) {
  if (v.rows() != space.dim() || v.cols() != 1) {
    throw DimensionError(std::string(op) + ": expected a " + std::to_string(space.dim()) +
                         "x1 column, got " + v.shape_string());
  }
}

// Row vector of the round bra (spec|, i.e. basis(spec)†·A.
ComplexMatrix round_bra(const GamowSpace& space, BasisSpec spec) {
  return mul(adjoint(basis_vector(space, spec)), space.metric());
}

}  // namespace

Resonance::Resonance(double energy, double width) : energy_(energy), width_(width) {
  if (!std::isfinite(energy)) throw std::invalid_argument("Resonance: energy must be finite");
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw std::invalid_argument("Resonance: width must be finite and > 0, got " + std::to_string(width));
  }
}

GamowSpace::GamowSpace(std::vector<Resonance> resonances)
    : resonances_(std::move(resonances)),
      metric_(dim(), dim()),
      root_b_(dim(), dim()),
      root_c_() {
  // (−i)^{1/2} on the principal branch is e^{−iπ/4}.
  const complex phase = std::polar(1.0, -std::numbers::pi / 4.0);
  const double h = std::numbers::sqrt2 / 2.0;
  const complex diag = phase * complex{0.0, h};
  const complex off = phase * h;
  for (std::size_t j = 0; j < resonances_.size(); ++j) {
    const std::size_t d = 2 * j;
    const std::size_t g = 2 * j + 1;
    metric_(d, g) = 1.0;
    metric_(g, d) = 1.0;
    root_b_(d, d) = diag;
    root_b_(g, g) = diag;
    root_b_(d, g) = off;
    root_b_(g, d) = off;
  }
  root_c_ = adjoint(root_b_);
}

GamowSpacePtr GamowSpace::create(std::vector<Resonance> resonances, std::size_t cap) {
  if (resonances.empty()) throw std::invalid_argument("GamowSpace: at least one resonance is required");
  if (resonances.size() > cap) {
    throw std::invalid_argument("GamowSpace: " + std::to_string(resonances.size()) +
                                " resonances exceed the cap of " + std::to_string(cap));
  }
  return GamowSpacePtr(new GamowSpace(std::move(resonances)));
}

std::size_t GamowSpace::index_of(BasisSpec spec) const {
  if (spec.resonance < 1 || spec.resonance > resonances_.size()) {
    throw std::out_of_range("GamowSpace: resonance index " + std::to_string(spec.resonance) +
                            " outside 1.." + std::to_string(resonances_.size()));
  }
  return 2 * (spec.resonance - 1) + (spec.kind == GamowKind::decaying ? 0 : 1);
}

double GamowSpace::min_width() const {
  return std::min_element(resonances_.begin(), resonances_.end(),
                          [](const Resonance& a, const Resonance& b) { return a.width() < b.width(); })
      ->width();
}

complex pseudo_product(const GamowSpace& space, const ComplexMatrix& v, const ComplexMatrix& w) {
  require_column(space, v, "pseudo_product");
  require_column(space, w, "pseudo_product");
  return mul(adjoint(v), space.metric(), w)(0, 0);
}

ComplexMatrix basis_vector(const GamowSpace& space, BasisSpec spec) {
  ComplexMatrix e(space.dim(), 1);
  e(space.index_of(spec), 0) = 1.0;
  return e;
}

ComplexMatrix dyad(const GamowSpace& space, BasisSpec left, BasisSpec right) {
  return mul(basis_vector(space, left), round_bra(space, right));
}

ComplexMatrix pseudo_adjoint(const GamowSpace& space, const ComplexMatrix& m) {
  if (m.rows() != space.dim() || m.cols() != space.dim()) {
    throw DimensionError("pseudo_adjoint: operator is " + m.shape_string() + " in a " +
                         std::to_string(space.dim()) + "-dimensional space");
  }
  return mul(space.metric(), adjoint(m), space.metric());
}

ComplexMatrix angular_ket(const GamowSpace& space, BasisSpec spec) {
  const ComplexMatrix& root = spec.kind == GamowKind::decaying ? space.root_b() : space.root_c();
  return mul(root, space.metric(), basis_vector(space, spec));
}

ComplexMatrix angular_bra(const GamowSpace& space, BasisSpec spec) {
  // ⟨ψ^G| pairs with B, ⟨ψ^D| with C.
  const ComplexMatrix& root = spec.kind == GamowKind::growing ? space.root_b() : space.root_c();
  return mul(round_bra(space, spec), root, space.metric());
}

ComplexMatrix angular_dyad(const GamowSpace& space, BasisSpec left, BasisSpec right) {
  return mul(angular_ket(space, left), angular_bra(space, right));
}

}  // namespace gamowlab
