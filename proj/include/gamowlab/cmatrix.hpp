#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gamowlab {

using complex = std::complex<double>;

/// Raised when operand shapes do not fit an operation. The message names
/// both shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major complex matrix. Every state, observable and operator in
/// the library is carried by one of these; dimensions stay small (a few
/// dozen) so there is no sparse or blocked storage.
///
/// Entries are finite on construction. Arithmetic results are not
/// re-checked, so overflow can still produce Inf downstream.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix. Both dimensions must be positive.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of row-major `entries`; size must be rows*cols and
  /// every entry finite.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries);

  /// Row-major literal, e.g. `{{0, 1}, {1, 0}}`.
  ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows);

  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const complex> diag);
  static ComplexMatrix column(std::span<const complex> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Bounds-checked access.
  const complex& at(std::size_t r, std::size_t c) const;

  std::span<complex> data() noexcept { return entries_; }
  std::span<const complex> data() const noexcept { return entries_; }

  /// "RxC", used in error messages.
  std::string shape_string() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, complex s) { return a *= s; }
  friend ComplexMatrix operator*(complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator-(ComplexMatrix a) { return a *= complex{-1.0, 0.0}; }

  /// Exact entrywise equality.
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<complex> entries_;
};

/// Matrix product. Throws DimensionError unless a.cols() == b.rows().
ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Product of three factors, left to right.
ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

ComplexMatrix transpose(const ComplexMatrix& a);

/// a·b − b·a for square matrices of equal dimension.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// sqrt(Σ |a_ij|²). This is the operator-size measure used everywhere.
double frobenius_norm(const ComplexMatrix& a);

/// frobenius_norm(a − b) ≤ tol. Shapes must match.
bool approx_eq(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

complex trace(const ComplexMatrix& a);

/// (a + a†)/2.
ComplexMatrix hermitian_part(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol);

}  // namespace gamowlab
