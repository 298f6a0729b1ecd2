#include "gamowlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gamowlab {

HermitianEigen hermitian_eigen(const ComplexMatrix& a, int max_sweeps) {
  if (!a.is_square()) throw DimensionError("hermitian_eigen: matrix is " + a.shape_string());
  const std::size_t n = a.rows();
  ComplexMatrix m = hermitian_part(a);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(frobenius_norm(m), 1e-300);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += std::norm(m(i, j));
    return std::sqrt(2.0 * s);
  };

  for (int sweep = 0; sweep < max_sweeps && off_norm() > 1e-15 * scale; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = std::abs(m(p, q));
        if (g < 1e-300) continue;
        // Phase D = diag(1, e^{-iφ}) makes the (p,q) entry real; a real
        // Jacobi rotation then annihilates it. V = D·R acts on columns p, q.
        const complex phase = m(p, q) / g;  // e^{iφ}
        const double theta = (m(q, q).real() - m(p, p).real()) / (2.0 * g);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const complex vqp = -s * std::conj(phase);
        const complex vqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {  // m ← m·V
          const complex mkp = m(k, p);
          const complex mkq = m(k, q);
          m(k, p) = c * mkp + vqp * mkq;
          m(k, q) = s * mkp + vqq * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // m ← V†·m
          const complex mpk = m(p, k);
          const complex mqk = m(q, k);
          m(p, k) = c * mpk + std::conj(vqp) * mqk;
          m(q, k) = s * mpk + std::conj(vqq) * mqk;
        }
        for (std::size_t k = 0; k < n; ++k) {  // vectors ← vectors·V
          const complex vkp = v(k, p);
          const complex vkq = v(k, q);
          v(k, p) = c * vkp + vqp * vkq;
          v(k, q) = s * vkp + vqq * vkq;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        m(p, p) = m(p, p).real();
        m(q, q) = m(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return m(i, i).real() < m(j, j).real(); });
  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = m(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("fit_line: need at least two (x, y) pairs");
  }
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_line: abscissae are all equal");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    f.max_abs_residual = std::max(f.max_abs_residual, std::abs(ys[i] - (f.slope * xs[i] + f.intercept)));
  }
  return f;
}

}  // namespace gamowlab
