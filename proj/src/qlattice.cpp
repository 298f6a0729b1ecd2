#include "gamowlab/qlattice.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

namespace gamowlab {
namespace {

using EMatrix = Eigen::MatrixXcd;

EMatrix to_eigen(const ComplexMatrix& m) {
  EMatrix e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

// Q·Q† for the columns of q, symmetrized. Empty q gives the zero projector.
ComplexMatrix projector_from_orthonormal(const EMatrix& q, std::size_t dim) {
  ComplexMatrix p(dim, dim);
  if (q.cols() == 0) return p;
  const EMatrix qq = q * q.adjoint();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) p(i, j) = qq(i, j);
  return hermitian_part(p);
}

// Orthonormal basis of the column space.
EMatrix range_basis(const EMatrix& m) {
  Eigen::JacobiSVD<EMatrix> svd(m, Eigen::ComputeThinU);
  Eigen::Index rank = 0;
  while (rank < svd.singularValues().size() && svd.singularValues()(rank) > kRankCutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

// Orthonormal basis of the null space.
EMatrix null_basis(const EMatrix& m) {
  Eigen::JacobiSVD<EMatrix> svd(m, Eigen::ComputeFullV);
  const Eigen::Index n = m.cols();
  Eigen::Index rank = 0;
  while (rank < svd.singularValues().size() && svd.singularValues()(rank) > kRankCutoff) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

void require_same_dim(const Projector& p, const Projector& q, const char* op) {
  if (p.dim() != q.dim()) {
    throw DimensionError(std::string(op) + ": dimensions " + std::to_string(p.dim()) + " and " +
                         std::to_string(q.dim()));
  }
}

}  // namespace

Projector::Projector(ComplexMatrix mat) : mat_(std::move(mat)) {
  if (!mat_.is_square()) throw DimensionError("Projector: matrix is " + mat_.shape_string());
  if (!is_hermitian(mat_, 1e-12)) throw std::invalid_argument("Projector: not Hermitian");
  if (!approx_eq(mul(mat_, mat_), mat_, 1e-10)) throw std::invalid_argument("Projector: not idempotent");
}

Projector Projector::zero(std::size_t dim) { return Projector(ComplexMatrix(dim, dim)); }

Projector Projector::identity(std::size_t dim) { return Projector(ComplexMatrix::identity(dim)); }

Projector Projector::onto(const ComplexMatrix& vectors) {
  return Projector(projector_from_orthonormal(range_basis(to_eigen(vectors)), vectors.rows()));
}

std::size_t Projector::rank() const {
  return static_cast<std::size_t>(std::llround(trace(mat_).real()));
}

Projector meet(const Projector& p, const Projector& q) {
  require_same_dim(p, q, "meet");
  const auto d = static_cast<Eigen::Index>(p.dim());
  const EMatrix id = EMatrix::Identity(d, d);
  // range(p) ∩ range(q) = null(I − p) ∩ null(I − q).
  EMatrix stacked(2 * d, d);
  stacked.topRows(d) = id - to_eigen(p.mat());
  stacked.bottomRows(d) = id - to_eigen(q.mat());
  return Projector(projector_from_orthonormal(null_basis(stacked), p.dim()));
}

Projector join(const Projector& p, const Projector& q) {
  require_same_dim(p, q, "join");
  const EMatrix bp = range_basis(to_eigen(p.mat()));
  const EMatrix bq = range_basis(to_eigen(q.mat()));
  EMatrix stacked(bp.rows(), bp.cols() + bq.cols());
  stacked << bp, bq;
  if (stacked.cols() == 0) return Projector::zero(p.dim());
  return Projector(projector_from_orthonormal(range_basis(stacked), p.dim()));
}

Projector ortho(const Projector& p) {
  return Projector(ComplexMatrix::identity(p.dim()) - p.mat());
}

bool lattice_equal(const Projector& p, const Projector& q) {
  require_same_dim(p, q, "lattice_equal");
  return approx_eq(p.mat(), q.mat(), kLatticeTol);
}

bool leq(const Projector& p, const Projector& q) { return lattice_equal(meet(p, q), p); }

DistributivityReport distributivity_check(const Projector& a, const Projector& b, const Projector& c) {
  require_same_dim(a, b, "distributivity_check");
  require_same_dim(a, c, "distributivity_check");
  DistributivityReport r{meet(a, join(b, c)), join(meet(a, b), meet(a, c)),
                         join(a, meet(b, c)), meet(join(a, b), join(a, c))};
  r.meet_equal = lattice_equal(r.lhs_meet, r.rhs_meet);
  r.join_equal = lattice_equal(r.lhs_join, r.rhs_join);
  r.inequality_holds = leq(r.rhs_meet, r.lhs_meet) && leq(r.lhs_join, r.rhs_join);
  return r;
}

bool compatible(const Projector& p, const Projector& q) {
  require_same_dim(p, q, "compatible");
  return frobenius_norm(commutator(p.mat(), q.mat())) <= 1e-10;
}

AbelianCertificate abelian_certificate(const std::vector<ComplexMatrix>& observables, double tol) {
  if (observables.empty()) throw std::invalid_argument("abelian_certificate: empty observable list");
  AbelianCertificate cert;
  bool first = true;
  for (std::size_t i = 0; i < observables.size(); ++i) {
    for (std::size_t j = i + 1; j < observables.size(); ++j) {
      const double n = frobenius_norm(commutator(observables[i], observables[j]));
      if (first || n > cert.worst_norm) {
        cert = {true, i, j, n};
        first = false;
      }
    }
  }
  if (observables.size() == 1 && !observables.front().is_square()) {
    throw DimensionError("abelian_certificate: observable is " + observables.front().shape_string());
  }
  cert.abelian = cert.worst_norm <= tol;
  return cert;
}

}  // namespace gamowlab
