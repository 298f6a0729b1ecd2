#include "gamowlab/cmatrix.hpp"

#include <cmath>

#include "gamowlab/kernels.hpp"

namespace gamowlab {
namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + a.shape_string() + " vs " +
                         b.shape_string());
  }
}

bool finite(const complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw DimensionError("ComplexMatrix: dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionError("ComplexMatrix: dimensions must be positive");
  if (entries_.size() != rows * cols) {
    throw DimensionError("ComplexMatrix: " + std::to_string(entries_.size()) +
                         " entries for shape " + shape_string());
  }
  for (const auto& z : entries_) {
    if (!finite(z)) throw std::invalid_argument("ComplexMatrix: non-finite entry");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  if (rows_ == 0 || cols_ == 0) throw DimensionError("ComplexMatrix: dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ComplexMatrix: ragged row literal");
    for (const auto& z : r) {
      if (!finite(z)) throw std::invalid_argument("ComplexMatrix: non-finite entry");
      entries_.push_back(z);
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const complex> values) {
  return ComplexMatrix(values.size(), 1, std::vector<complex>(values.begin(), values.end()));
}

const complex& ComplexMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("ComplexMatrix::at(" + std::to_string(r) + ", " + std::to_string(c) +
                            ") on " + shape_string());
  }
  return (*this)(r, c);
}

std::string ComplexMatrix::shape_string() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "add");
  kernels::active().axpy(complex{1.0, 0.0}, other.entries_.data(), entries_.data(), size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "sub");
  // Plain loop: a − b must be exactly −(b − a), which a fused multiply-add
  // by −1 would not guarantee.
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complex scalar) {
  for (auto& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mul: inner dimensions differ, " + a.shape_string() + " * " +
                         b.shape_string());
  }
  ComplexMatrix c(a.rows(), b.cols());
  kernels::active().gemm(a.data().data(), b.data().data(), c.data().data(), a.rows(), a.cols(),
                         b.cols());
  return c;
}

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
  return mul(mul(a, b), c);
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DimensionError("commutator: need equal square shapes, got " + a.shape_string() +
                         " and " + b.shape_string());
  }
  return mul(a, b) - mul(b, a);
}

double frobenius_norm(const ComplexMatrix& a) {
  if (a.empty()) return 0.0;
  return std::sqrt(kernels::active().sum_sq(a.data().data(), a.size()));
}

bool approx_eq(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  require_same_shape(a, b, "approx_eq");
  return frobenius_norm(a - b) <= tol;
}

complex trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("trace: matrix is " + a.shape_string());
  complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("hermitian_part: matrix is " + a.shape_string());
  ComplexMatrix h = a + adjoint(a);
  return h *= 0.5;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  return a.is_square() && frobenius_norm(a - adjoint(a)) <= tol;
}

}  // namespace gamowlab
