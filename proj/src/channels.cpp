#include "gamowlab/channels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gamowlab/linalg.hpp"

namespace gamowlab {
namespace {

void require_2x2(const ComplexMatrix& m, const char* op) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw DimensionError(std::string(op) + ": expected a 2x2 observable, got " + m.shape_string());
  }
}

void require_dim(const KrausChannel& ch, const ComplexMatrix& m, const char* op) {
  if (m.rows() != ch.dim() || m.cols() != ch.dim()) {
    throw DimensionError(std::string(op) + ": channel acts on " + std::to_string(ch.dim()) + "x" +
                         std::to_string(ch.dim()) + ", operand is " + m.shape_string());
  }
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw std::invalid_argument("KrausChannel: no Kraus operators");
  dim_ = kraus_.front().rows();
  for (const auto& e : kraus_) {
    if (e.rows() != dim_ || e.cols() != dim_) {
      throw DimensionError("KrausChannel: Kraus operator " + e.shape_string() + " in a " +
                           std::to_string(dim_) + "-dimensional channel");
    }
  }
  if (const double d = completeness_defect(); !(d <= kCompletenessTol)) {
    throw std::invalid_argument("KrausChannel: completeness defect " + std::to_string(d));
  }
}

double KrausChannel::completeness_defect() const {
  ComplexMatrix s(dim_, dim_);
  for (const auto& e : kraus_) s += mul(adjoint(e), e);
  return frobenius_norm(s - ComplexMatrix::identity(dim_));
}

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  if (!mat_.is_square()) throw DimensionError("DensityMatrix: matrix is " + mat_.shape_string());
  if (!is_hermitian(mat_, 1e-12)) throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(trace(mat_) - 1.0) > 1e-12) throw std::invalid_argument("DensityMatrix: trace is not 1");
  if (hermitian_eigen(mat_).values.front() < -1e-10) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
  }
}

KrausChannel damping_channel(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("damping_channel: p = " + std::to_string(p) + " outside [0, 1]");
  }
  return KrausChannel({ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - p)}},
                       ComplexMatrix{{0.0, std::sqrt(p)}, {0.0, 0.0}}});
}

DensityMatrix apply_schrodinger(const KrausChannel& ch, const DensityMatrix& rho) {
  require_dim(ch, rho.mat(), "apply_schrodinger");
  ComplexMatrix out(ch.dim(), ch.dim());
  for (const auto& e : ch.kraus()) out += mul(e, rho.mat(), adjoint(e));
  try {
    return DensityMatrix(std::move(out));
  } catch (const std::invalid_argument& err) {
    throw std::runtime_error(std::string("apply_schrodinger: malformed channel output: ") + err.what());
  }
}

ComplexMatrix apply_heisenberg(const KrausChannel& ch, const ComplexMatrix& obs) {
  require_dim(ch, obs, "apply_heisenberg");
  ComplexMatrix out(ch.dim(), ch.dim());
  for (const auto& e : ch.kraus()) out += mul(adjoint(e), obs, e);
  const double scale = std::max(1.0, frobenius_norm(obs));
  if (is_hermitian(obs, 1e-12 * scale) && frobenius_norm(out - adjoint(out)) > 1e-14) {
    // Roundoff drift on a Hermitian input.
    return hermitian_part(out);
  }
  return out;
}

ComplexMatrix iterate_heisenberg(const KrausChannel& ch, const ComplexMatrix& obs, std::size_t n) {
  require_dim(ch, obs, "iterate_heisenberg");
  ComplexMatrix o = obs;
  for (std::size_t i = 0; i < n; ++i) o = apply_heisenberg(ch, o);
  return o;
}

ComplexMatrix damping_closed_form(double p, std::size_t n, const ComplexMatrix& obs) {
  require_2x2(obs, "damping_closed_form");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("damping_closed_form: p outside [0, 1]");
  const double keep = std::pow(1.0 - p, static_cast<double>(n));  // (1−p)^n
  const double coherence = std::pow(1.0 - p, 0.5 * static_cast<double>(n));
  return ComplexMatrix{{obs(0, 0), coherence * obs(0, 1)},
                       {coherence * obs(1, 0), keep * obs(1, 1) + obs(0, 0) * (1.0 - keep)}};
}

ComplexMatrix damping_limit(const ComplexMatrix& obs) {
  require_2x2(obs, "damping_limit");
  return ComplexMatrix::identity(2) * obs(0, 0);
}

}  // namespace gamowlab
