#pragma once

#include <vector>

#include "gamowlab/cmatrix.hpp"

namespace gamowlab {

struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  ComplexMatrix vectors;       ///< unitary; column k belongs to values[k]
};

/// Cyclic Jacobi diagonalization of the Hermitian part of `a`. Sweeps until
/// the off-diagonal mass falls below 1e-15 relative to the matrix norm, or
/// `max_sweeps` is reached.
HermitianEigen hermitian_eigen(const ComplexMatrix& a, int max_sweeps = 64);

/// Least-squares line y ≈ slope·x + intercept.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_abs_residual = 0.0;
};

/// Requires xs.size() == ys.size() ≥ 2 and xs not all equal.
LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace gamowlab
