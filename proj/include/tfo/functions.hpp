#pragma once

#include <vector>

namespace tfo {

// Orthonormal Hermite functions h_0..h_kmax evaluated at the given points,
// returned row-major: row k holds h_k at every point. Uses the normalized
// three-term recurrence with the Gaussian folded in from the start, which
// stays bounded for all k and t (the textbook H_k * exp(-t^2/2) route
// overflows long before k reaches useful sizes).
std::vector<std::vector<double>> hermite_functions(int kmax, const std::vector<double>& t);

// Legendre polynomials of degrees 0..m-1 on (-1,1), normalized to unit L2
// norm there, evaluated at the given points; row k is degree k.
std::vector<std::vector<double>> normalized_legendre(int m, const std::vector<double>& u);

// Recurrence coefficient in u * Pbar_k = alpha_k Pbar_{k+1} + alpha_{k-1} Pbar_{k-1}
// for the unit-norm Legendre family above.
double legendre_alpha(int k);

}  // namespace tfo
