#include "tfo/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tfo {

namespace {

// Core QL-with-implicit-shifts loop on (d, e) with e[i] coupling rows i and
// i+1. When z is non-null the rotations are accumulated into it (z must come
// in as the identity, row-major n*n). Classic tql2 structure.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e,
                       double* z, int n) {
  if (n == 1) return;
  e.resize(static_cast<size_t>(n), 0.0);
  e[static_cast<size_t>(n) - 1] = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  long iter_budget = 30L * n;

  for (int l = 0; l < n; ++l) {
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (--iter_budget < 0) {
          throw std::runtime_error(
              "eig_sym_tridiagonal: QL iteration failed to converge "
              "(corrupt or non-finite input?)");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            // Deflated early: the rotation chain annihilated an off-diagonal
            // entry above the target row.
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z != nullptr) {
            for (int k = 0; k < n; ++k) {
              f = z[static_cast<size_t>(k) * n + i + 1];
              z[static_cast<size_t>(k) * n + i + 1] =
                  s * z[static_cast<size_t>(k) * n + i] + c * f;
              z[static_cast<size_t>(k) * n + i] =
                  c * z[static_cast<size_t>(k) * n + i] - s * f;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

void apply_real_sym(const OperatorMatrix& A, const std::vector<double>& x,
                    std::vector<double>& out) {
  const int n = A.dim;
  out.assign(static_cast<size_t>(n), 0.0);
  if (A.storage == Storage::SymTridiag) {
    for (int i = 0; i < n; ++i) {
      double acc = A.diag[i] * x[i];
      if (i > 0) acc += A.off[i - 1] * x[i - 1];
      if (i + 1 < n) acc += A.off[i] * x[i + 1];
      out[i] = acc;
    }
  } else {
    for (int i = 0; i < n; ++i) {
      const double* row = A.zr.data() + static_cast<size_t>(i) * n;
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += row[j] * x[j];
      out[i] = acc;
    }
  }
}

// Sorts pairs ascending, fixes eigenvector signs so the first component of
// magnitude above 1e-8 is positive, and records per-pair residuals. This is
// what makes decompositions byte-reproducible across runs.
EigenDecomposition finalize(const OperatorMatrix& A, std::vector<double> vals,
                            std::vector<std::vector<double>> vecs) {
  const int n = A.dim;
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return vals[a] < vals[b]; });

  EigenDecomposition dec;
  dec.eigenvalues.reserve(n);
  dec.eigenvectors.reserve(n);
  dec.residual_norms.reserve(n);
  std::vector<double> av;
  for (int idx : order) {
    std::vector<double> v = std::move(vecs[idx]);
    for (double comp : v) {
      if (std::fabs(comp) > 1e-8) {
        if (comp < 0.0) {
          for (double& c : v) c = -c;
        }
        break;
      }
    }
    apply_real_sym(A, v, av);
    double res = 0.0;
    for (int i = 0; i < n; ++i) {
      const double diff = av[i] - vals[idx] * v[i];
      res += diff * diff;
    }
    dec.eigenvalues.push_back(vals[idx]);
    dec.eigenvectors.push_back(std::move(v));
    dec.residual_norms.push_back(std::sqrt(res));
  }
  return dec;
}

}  // namespace

EigenDecomposition eig_sym_tridiagonal(const OperatorMatrix& T) {
  if (T.storage != Storage::SymTridiag)
    throw std::invalid_argument("eig_sym_tridiagonal: expected SymTridiag storage");
  const int n = T.dim;
  std::vector<double> d = T.diag;
  std::vector<double> e = T.off;
  std::vector<double> z(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) z[static_cast<size_t>(i) * n + i] = 1.0;
  ql_implicit_shift(d, e, z.data(), n);

  std::vector<std::vector<double>> vecs(static_cast<size_t>(n),
                                        std::vector<double>(static_cast<size_t>(n)));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) vecs[k][i] = z[static_cast<size_t>(i) * n + k];
  return finalize(T, std::move(d), std::move(vecs));
}

std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag,
                                            std::vector<double> off) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) return {};
  if (static_cast<int>(off.size()) + 1 != n && !(n == 1 && off.empty()))
    throw std::invalid_argument("tridiagonal_eigenvalues: off size must be n-1");
  ql_implicit_shift(diag, off, nullptr, n);
  std::sort(diag.begin(), diag.end());
  return diag;
}

EigenDecomposition eig_sym_dense(const OperatorMatrix& A) {
  if (A.storage != Storage::DenseRealSym)
    throw std::invalid_argument("eig_sym_dense: expected DenseRealSym storage");
  const int n = A.dim;
  std::vector<double> a = A.zr;  // working copy, row-major
  std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<size_t>(i) * n + j];
  };

  for (int sweep = 1; sweep <= 30; ++sweep) {
    double off_sum = 0.0;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) off_sum += std::fabs(at(p, q));
    if (off_sum == 0.0) {
      std::vector<double> vals(static_cast<size_t>(n));
      std::vector<std::vector<double>> vecs(
          static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n)));
      for (int k = 0; k < n; ++k) {
        vals[k] = at(k, k);
        for (int i = 0; i < n; ++i) vecs[k][i] = v[static_cast<size_t>(i) * n + k];
      }
      return finalize(A, std::move(vals), std::move(vecs));
    }
    // Early sweeps skip tiny pivots; later sweeps rotate everything that is
    // not already negligible relative to its diagonal neighborhood.
    const double thresh = (sweep < 4) ? 0.2 * off_sum / (n * n) : 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double g = 100.0 * std::fabs(at(p, q));
        if (sweep > 4 && std::fabs(at(p, p)) + g == std::fabs(at(p, p)) &&
            std::fabs(at(q, q)) + g == std::fabs(at(q, q))) {
          at(p, q) = 0.0;
          at(q, p) = 0.0;
        } else if (std::fabs(at(p, q)) > thresh) {
          const double h = at(q, q) - at(p, p);
          double t;
          if (std::fabs(h) + g == std::fabs(h)) {
            t = at(p, q) / h;
          } else {
            const double theta = 0.5 * h / at(p, q);
            t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
            if (theta < 0.0) t = -t;
          }
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const double tau = s / (1.0 + c);
          const double apq = at(p, q);
          at(p, p) -= t * apq;
          at(q, q) += t * apq;
          at(p, q) = 0.0;
          at(q, p) = 0.0;
          auto rotate = [&](double& x, double& y) {
            const double xo = x, yo = y;
            x = xo - s * (yo + tau * xo);
            y = yo + s * (xo - tau * yo);
          };
          // Only the upper triangle participates; the lower one is never read
          // again after this point.
          for (int j = 0; j < p; ++j) rotate(at(j, p), at(j, q));
          for (int j = p + 1; j < q; ++j) rotate(at(p, j), at(j, q));
          for (int j = q + 1; j < n; ++j) rotate(at(p, j), at(q, j));
          for (int j = 0; j < n; ++j)
            rotate(v[static_cast<size_t>(j) * n + p], v[static_cast<size_t>(j) * n + q]);
        }
      }
    }
  }
  throw std::runtime_error(
      "eig_sym_dense: Jacobi failed to converge in 30 sweeps");
}

RayleighResult rayleigh_quotient(const OperatorMatrix& M, const std::vector<cplx>& v) {
  if (static_cast<int>(v.size()) != M.dim)
    throw std::invalid_argument("rayleigh_quotient: size mismatch");
  double nrm2 = 0.0;
  for (const cplx& c : v) nrm2 += std::norm(c);
  if (nrm2 == 0.0) throw std::invalid_argument("rayleigh_quotient: zero vector");

  const std::vector<cplx> mv = M.apply(v);
  cplx num(0.0);
  for (size_t i = 0; i < v.size(); ++i) num += std::conj(v[i]) * mv[i];
  const cplx q = num / nrm2;

  double defect2 = 0.0;
  for (size_t i = 0; i < v.size(); ++i) defect2 += std::norm(mv[i] - q * v[i]);
  return {q, std::sqrt(defect2 / nrm2)};
}

RayleighResult rayleigh_quotient(const OperatorMatrix& M, const std::vector<double>& v) {
  std::vector<cplx> vc(v.size());
  for (size_t i = 0; i < v.size(); ++i) vc[i] = cplx(v[i]);
  return rayleigh_quotient(M, vc);
}

}  // namespace tfo
