#pragma once

#include "tfo/grid.hpp"
#include "tfo/matrix.hpp"

namespace tfo {

// Discretized truncated Fourier operator in weighted coordinates:
// F[j,k] = (1/sqrt(2*pi)) * sqrt(w_j w_k) * exp(i t_j xi_k), with t and xi
// both running over the grid nodes. DenseComplex.
OperatorMatrix build_truncated_fourier(const QuadratureGrid& grid);

// Conjugate transpose. In weighted coordinates this is the L2 adjoint.
OperatorMatrix build_adjoint(const OperatorMatrix& F);

// Reflection t -> -t as a permutation matrix J[i, rev(i)] = 1 (mirrored
// weights are equal, so no weight factors appear). Requires a symmetric grid.
OperatorMatrix build_parity(const QuadratureGrid& grid);

// Real kernels cos(t xi) and sin(t xi) with the same normalization and weight
// factors as the Fourier matrix; F = C + iS entrywise. Symmetric grids only.
OperatorMatrix build_cosine_transform(const QuadratureGrid& grid);
OperatorMatrix build_sine_transform(const QuadratureGrid& grid);

// F*F. On symmetric grids this product is real up to rounding; the imaginary
// part is checked against a 1e-13 ceiling and dropped. A larger imaginary
// residue means the grid lost its mirror symmetry somewhere, and throws.
OperatorMatrix build_gram(const OperatorMatrix& F);

}  // namespace tfo
