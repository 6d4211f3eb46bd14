#pragma once

#include <complex>
#include <string_view>
#include <vector>

namespace tfo {

using cplx = std::complex<double>;

enum class Storage { DenseComplex, DenseRealSym, SymTridiag };

// Finite-dimensional operator in weighted coordinates: the matrix acts on
// vectors v[k] = sqrt(weight[k]) * x(node[k]), so the Euclidean adjoint is
// the L2 adjoint and symmetric storage really means selfadjoint.
struct OperatorMatrix {
  Storage storage = Storage::DenseComplex;
  int dim = 0;

  // Exactly one payload is active, selected by `storage`.
  std::vector<cplx> zc;      // DenseComplex, row-major dim*dim
  std::vector<double> zr;    // DenseRealSym, row-major dim*dim, kept exactly symmetric
  std::vector<double> diag;  // SymTridiag main diagonal, length dim
  std::vector<double> off;   // SymTridiag off-diagonal, length dim-1

  // When the operator was assembled from a known k-mode basis (so its rank
  // is k by construction), the builder records it here; 0 means full/unknown.
  int spectral_rank = 0;

  static constexpr std::string_view coordinates = "weighted";

  static OperatorMatrix dense_complex(int n);
  static OperatorMatrix dense_real_sym(int n);
  static OperatorMatrix sym_tridiag(int n);

  cplx& c(int i, int j) { return zc[static_cast<size_t>(i) * dim + j]; }
  const cplx& c(int i, int j) const { return zc[static_cast<size_t>(i) * dim + j]; }
  double& r(int i, int j) { return zr[static_cast<size_t>(i) * dim + j]; }
  const double& r(int i, int j) const { return zr[static_cast<size_t>(i) * dim + j]; }

  // Entry view that works for every storage kind (tridiagonal reads as dense).
  cplx entry(int i, int j) const;

  std::vector<cplx> apply(const std::vector<cplx>& v) const;

  // Force bit-exact symmetry on a DenseRealSym payload by averaging.
  void symmetrize();
};

// Dense product; dimensions must agree. The result is always DenseComplex,
// whatever the operand storages.
OperatorMatrix matmul(const OperatorMatrix& A, const OperatorMatrix& B);

OperatorMatrix conj_transpose(const OperatorMatrix& A);

// max_ij |A_ij - B_ij| over the dense view.
double max_abs_diff(const OperatorMatrix& A, const OperatorMatrix& B);
double max_abs(const OperatorMatrix& A);

// Euclidean norm helpers for plain vectors.
double norm2(const std::vector<cplx>& v);
double norm2(const std::vector<double>& v);
double max_abs(const std::vector<cplx>& v);

}  // namespace tfo
