#include "tfo/functions.hpp"

#include <cmath>
#include <stdexcept>

namespace tfo {

std::vector<std::vector<double>> hermite_functions(int kmax, const std::vector<double>& t) {
  if (kmax < 0) throw std::invalid_argument("hermite_functions: kmax must be >= 0");
  const size_t n = t.size();
  std::vector<std::vector<double>> h(static_cast<size_t>(kmax) + 1,
                                     std::vector<double>(n, 0.0));

  // Orthonormal recurrence with the Gaussian folded in from the start, so each
  // row already has unit L2 norm and never overflows the way bare Hermite
  // polynomials do at large degree.
  const double h0 = std::pow(M_PI, -0.25);
  for (size_t j = 0; j < n; ++j) h[0][j] = h0 * std::exp(-0.5 * t[j] * t[j]);
  if (kmax >= 1) {
    for (size_t j = 0; j < n; ++j) h[1][j] = std::sqrt(2.0) * t[j] * h[0][j];
  }
  for (int k = 1; k < kmax; ++k) {
    const double c1 = std::sqrt(2.0 / (k + 1));
    const double c2 = std::sqrt(static_cast<double>(k) / (k + 1));
    for (size_t j = 0; j < n; ++j) {
      h[k + 1][j] = c1 * t[j] * h[k][j] - c2 * h[k - 1][j];
    }
  }
  return h;
}

std::vector<std::vector<double>> normalized_legendre(int m, const std::vector<double>& u) {
  if (m < 1) throw std::invalid_argument("normalized_legendre: need m >= 1 rows");
  const size_t n = u.size();
  std::vector<std::vector<double>> p(static_cast<size_t>(m), std::vector<double>(n, 0.0));

  // Bonnet recurrence on the monic-normalized family, then scale each degree k
  // by sqrt((2k+1)/2) so rows are orthonormal in L2(-1,1).
  std::vector<double> pk(n, 1.0), pk1(n, 0.0);
  for (int k = 0; k < m; ++k) {
    const double scale = std::sqrt((2.0 * k + 1.0) / 2.0);
    for (size_t j = 0; j < n; ++j) p[k][j] = scale * pk[j];
    if (k + 1 < m) {
      for (size_t j = 0; j < n; ++j) {
        const double next =
            ((2.0 * k + 1.0) * u[j] * pk[j] - k * pk1[j]) / (k + 1.0);
        pk1[j] = pk[j];
        pk[j] = next;
      }
    }
  }
  return p;
}

double legendre_alpha(int k) {
  if (k < 0) throw std::invalid_argument("legendre_alpha: k must be >= 0");
  return (k + 1.0) / std::sqrt((2.0 * k + 1.0) * (2.0 * k + 3.0));
}

}  // namespace tfo
