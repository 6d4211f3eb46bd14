#pragma once

#include <complex>
#include <vector>

#include "tfo/matrix.hpp"

namespace tfo {

// Result of a full symmetric diagonalization. Eigenvalues ascending;
// eigenvectors[k] is the unit vector paired with eigenvalues[k], stored in the
// same weighted coordinates as the input matrix. residual_norms[k] records
// ||A v_k - lambda_k v_k|| as a per-pair quality certificate.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
  std::vector<double> residual_norms;
};

// Implicit-shift QL iteration. Requires SymTridiag storage; throws
// std::runtime_error if the off-diagonal fails to collapse within 30*n
// sweeps (which in practice means the input held NaNs or garbage).
EigenDecomposition eig_sym_tridiagonal(const OperatorMatrix& T);

// Eigenvalues only, no accumulation of rotations. Same algorithm as
// eig_sym_tridiagonal but O(n^2) total, which matters for the mesh-refinement
// oracles that run at several thousand points.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag,
                                            std::vector<double> off);

// Cyclic Jacobi rotations. Requires DenseRealSym storage; throws
// std::runtime_error after 30 sweeps without convergence.
EigenDecomposition eig_sym_dense(const OperatorMatrix& A);

struct RayleighResult {
  cplx value;     // <v, Mv> / <v, v>
  double defect;  // ||Mv - value*v|| / ||v||, small iff v is genuinely an eigenvector
};

// Works for any storage kind, complex or real. Throws std::invalid_argument
// on a zero vector.
RayleighResult rayleigh_quotient(const OperatorMatrix& M, const std::vector<cplx>& v);
RayleighResult rayleigh_quotient(const OperatorMatrix& M, const std::vector<double>& v);

}  // namespace tfo
