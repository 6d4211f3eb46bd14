#include "tfo/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace tfo {

OperatorMatrix OperatorMatrix::dense_complex(int n) {
  OperatorMatrix m;
  m.storage = Storage::DenseComplex;
  m.dim = n;
  m.zc.assign(static_cast<size_t>(n) * n, cplx(0.0));
  return m;
}

OperatorMatrix OperatorMatrix::dense_real_sym(int n) {
  OperatorMatrix m;
  m.storage = Storage::DenseRealSym;
  m.dim = n;
  m.zr.assign(static_cast<size_t>(n) * n, 0.0);
  return m;
}

OperatorMatrix OperatorMatrix::sym_tridiag(int n) {
  OperatorMatrix m;
  m.storage = Storage::SymTridiag;
  m.dim = n;
  m.diag.assign(static_cast<size_t>(n), 0.0);
  m.off.assign(n > 0 ? static_cast<size_t>(n - 1) : 0, 0.0);
  return m;
}

cplx OperatorMatrix::entry(int i, int j) const {
  switch (storage) {
    case Storage::DenseComplex:
      return c(i, j);
    case Storage::DenseRealSym:
      return cplx(r(i, j));
    case Storage::SymTridiag:
      if (i == j) return cplx(diag[i]);
      if (i == j + 1) return cplx(off[j]);
      if (j == i + 1) return cplx(off[i]);
      return cplx(0.0);
  }
  return cplx(0.0);
}

std::vector<cplx> OperatorMatrix::apply(const std::vector<cplx>& v) const {
  if (static_cast<int>(v.size()) != dim)
    throw std::invalid_argument("OperatorMatrix::apply: dimension mismatch");
  std::vector<cplx> out(v.size(), cplx(0.0));
  switch (storage) {
    case Storage::DenseComplex:
      for (int i = 0; i < dim; ++i) {
        cplx acc = 0.0;
        const cplx* row = zc.data() + static_cast<size_t>(i) * dim;
        for (int j = 0; j < dim; ++j) acc += row[j] * v[j];
        out[i] = acc;
      }
      break;
    case Storage::DenseRealSym:
      for (int i = 0; i < dim; ++i) {
        cplx acc = 0.0;
        const double* row = zr.data() + static_cast<size_t>(i) * dim;
        for (int j = 0; j < dim; ++j) acc += row[j] * v[j];
        out[i] = acc;
      }
      break;
    case Storage::SymTridiag:
      for (int i = 0; i < dim; ++i) {
        cplx acc = diag[i] * v[i];
        if (i > 0) acc += off[i - 1] * v[i - 1];
        if (i + 1 < dim) acc += off[i] * v[i + 1];
        out[i] = acc;
      }
      break;
  }
  return out;
}

void OperatorMatrix::symmetrize() {
  if (storage != Storage::DenseRealSym) return;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      double s = 0.5 * (r(i, j) + r(j, i));
      r(i, j) = s;
      r(j, i) = s;
    }
}

namespace {

// Materialize any storage as a contiguous complex matrix so the product loop
// below runs on raw arrays; the O(n^2) copy is noise next to the O(n^3) product.
std::vector<cplx> dense_view(const OperatorMatrix& A) {
  if (A.storage == Storage::DenseComplex) return A.zc;
  std::vector<cplx> d(static_cast<size_t>(A.dim) * A.dim, cplx(0.0));
  if (A.storage == Storage::DenseRealSym) {
    for (size_t k = 0; k < d.size(); ++k) d[k] = cplx(A.zr[k]);
  } else {
    for (int i = 0; i < A.dim; ++i) {
      d[static_cast<size_t>(i) * A.dim + i] = A.diag[i];
      if (i + 1 < A.dim) {
        d[static_cast<size_t>(i) * A.dim + i + 1] = A.off[i];
        d[static_cast<size_t>(i + 1) * A.dim + i] = A.off[i];
      }
    }
  }
  return d;
}

}  // namespace

OperatorMatrix matmul(const OperatorMatrix& A, const OperatorMatrix& B) {
  if (A.dim != B.dim) throw std::invalid_argument("matmul: dimension mismatch");
  const int n = A.dim;
  const auto a = dense_view(A);
  const auto b = dense_view(B);
  OperatorMatrix C = OperatorMatrix::dense_complex(n);
  // k-in-the-middle loop order keeps the inner loop contiguous for both the
  // row of C and the row of B.
  for (int i = 0; i < n; ++i) {
    cplx* crow = C.zc.data() + static_cast<size_t>(i) * n;
    const cplx* arow = a.data() + static_cast<size_t>(i) * n;
    for (int k = 0; k < n; ++k) {
      const cplx aik = arow[k];
      const cplx* brow = b.data() + static_cast<size_t>(k) * n;
      for (int j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
  return C;
}

OperatorMatrix conj_transpose(const OperatorMatrix& A) {
  OperatorMatrix T = OperatorMatrix::dense_complex(A.dim);
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) T.c(i, j) = std::conj(A.entry(j, i));
  return T;
}

double max_abs_diff(const OperatorMatrix& A, const OperatorMatrix& B) {
  if (A.dim != B.dim) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) m = std::max(m, std::abs(A.entry(i, j) - B.entry(i, j)));
  return m;
}

double max_abs(const OperatorMatrix& A) {
  double m = 0.0;
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) m = std::max(m, std::abs(A.entry(i, j)));
  return m;
}

double norm2(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace tfo
