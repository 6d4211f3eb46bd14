#include "tfo/fourier.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tfo {

namespace {
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * M_PI);

std::vector<double> sqrt_weights(const QuadratureGrid& grid) {
  std::vector<double> sw(grid.weights.size());
  for (size_t i = 0; i < sw.size(); ++i) sw[i] = std::sqrt(grid.weights[i]);
  return sw;
}
}  // namespace

OperatorMatrix build_truncated_fourier(const QuadratureGrid& grid) {
  const int n = grid.size();
  const auto sw = sqrt_weights(grid);
  OperatorMatrix F = OperatorMatrix::dense_complex(n);
  for (int j = 0; j < n; ++j) {
    const double tj = grid.nodes[j];
    const double cj = kInvSqrt2Pi * sw[j];
    cplx* row = F.zc.data() + static_cast<size_t>(j) * n;
    for (int k = 0; k < n; ++k) {
      // The phase t_j*xi_k is formed as a single product so that mirrored
      // node pairs produce exactly negated phases, which keeps the parity
      // identities exact in floating point (cos is even, sin is odd).
      const double phase = tj * grid.nodes[k];
      row[k] = cj * sw[k] * cplx(std::cos(phase), std::sin(phase));
    }
  }
  return F;
}

OperatorMatrix build_adjoint(const OperatorMatrix& F) {
  if (F.storage != Storage::DenseComplex)
    throw std::invalid_argument("build_adjoint: expected DenseComplex storage");
  return conj_transpose(F);
}

OperatorMatrix build_parity(const QuadratureGrid& grid) {
  if (!grid.symmetric)
    throw std::invalid_argument("build_parity: grid is not symmetric");
  const int n = grid.size();
  OperatorMatrix J = OperatorMatrix::dense_complex(n);
  for (int i = 0; i < n; ++i)
    J.zc[static_cast<size_t>(i) * n + grid.rev(i)] = cplx(1.0);
  return J;
}

namespace {

template <typename Kernel>
OperatorMatrix build_real_kernel(const QuadratureGrid& grid, Kernel kernel,
                                 const char* who) {
  if (!grid.symmetric) {
    throw std::invalid_argument(std::string(who) + ": grid is not symmetric");
  }
  const int n = grid.size();
  const auto sw = sqrt_weights(grid);
  OperatorMatrix M = OperatorMatrix::dense_real_sym(n);
  for (int j = 0; j < n; ++j) {
    const double cj = kInvSqrt2Pi * sw[j];
    for (int k = 0; k < n; ++k) {
      M.zr[static_cast<size_t>(j) * n + k] =
          cj * sw[k] * kernel(grid.nodes[j] * grid.nodes[k]);
    }
  }
  M.symmetrize();
  return M;
}

}  // namespace

OperatorMatrix build_cosine_transform(const QuadratureGrid& grid) {
  return build_real_kernel(
      grid, [](double p) { return std::cos(p); }, "build_cosine_transform");
}

OperatorMatrix build_sine_transform(const QuadratureGrid& grid) {
  return build_real_kernel(
      grid, [](double p) { return std::sin(p); }, "build_sine_transform");
}

OperatorMatrix build_gram(const OperatorMatrix& F) {
  if (F.storage != Storage::DenseComplex)
    throw std::invalid_argument("build_gram: expected DenseComplex storage");
  const OperatorMatrix G = matmul(conj_transpose(F), F);
  const int n = G.dim;
  double max_imag = 0.0;
  for (const cplx& z : G.zc) max_imag = std::max(max_imag, std::fabs(z.imag()));
  if (max_imag > 1e-13) {
    throw std::runtime_error(
        "build_gram: imaginary residue " + std::to_string(max_imag) +
        " exceeds 1e-13; the underlying grid is not mirror-symmetric");
  }
  OperatorMatrix out = OperatorMatrix::dense_real_sym(n);
  for (size_t i = 0; i < G.zc.size(); ++i) out.zr[i] = G.zc[i].real();
  out.symmetrize();
  return out;
}

}  // namespace tfo
