#include "tfo/diff_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tfo/eigen.hpp"
#include "tfo/functions.hpp"
#include "tfo/quadrature.hpp"

namespace tfo {

namespace {

// Weighted basis evaluation, row-major n x m: entry (j,k) = sqrt(w_j) h_k(t_j).
std::vector<double> weighted_hermite_basis(const QuadratureGrid& grid, int m) {
  const int n = grid.size();
  const auto rows = hermite_functions(m - 1, grid.nodes);
  std::vector<double> B(static_cast<size_t>(n) * m);
  for (int j = 0; j < n; ++j) {
    const double sw = std::sqrt(grid.weights[j]);
    for (int k = 0; k < m; ++k)
      B[static_cast<size_t>(j) * m + k] = sw * rows[k][j];
  }
  return B;
}

void require_kind(const QuadratureGrid& grid, DomainKind kind, const char* who) {
  if (grid.domain.kind != kind)
    throw std::invalid_argument(std::string(who) + ": wrong domain kind");
}

}  // namespace

int hermite_faithful_modes(const QuadratureGrid& grid) {
  require_kind(grid, DomainKind::FullLine, "hermite_faithful_modes");
  const int n = grid.size();
  const int mcap = std::max(1, n / 2);
  const auto B = weighted_hermite_basis(grid, mcap);

  // Discrete Gram of the sampled basis. Exactly I would mean the grid
  // integrates every retained product exactly; the deviation measures how
  // much of each mode leaks past the grid's bandwidth and domain cutoff.
  std::vector<double> G(static_cast<size_t>(mcap) * mcap, 0.0);
  for (int j = 0; j < n; ++j) {
    const double* row = B.data() + static_cast<size_t>(j) * mcap;
    for (int p = 0; p < mcap; ++p)
      for (int q = p; q < mcap; ++q)
        G[static_cast<size_t>(p) * mcap + q] += row[p] * row[q];
  }

  int best = 1;
  double run = 0.0;
  for (int m = 1; m <= mcap; ++m) {
    // Grow the running deviation by the new frontier row/column of the
    // leading m x m block.
    for (int q = 0; q < m; ++q) {
      const double want = (q == m - 1) ? 1.0 : 0.0;
      run = std::max(run,
                     std::fabs(G[static_cast<size_t>(q) * mcap + (m - 1)] - want));
    }
    // A relative error of e in the basis shows up in the assembled spectrum
    // scaled by the largest eigenvalue 2m-1; keep the product under the
    // 1e-9 faithfulness budget with a safety margin.
    if ((2.0 * m - 1.0) * run <= 2.5e-10) best = m;
  }
  return best;
}

OperatorMatrix build_hermite_operator(const QuadratureGrid& grid, int m) {
  require_kind(grid, DomainKind::FullLine, "build_hermite_operator");
  const int n = grid.size();
  if (m == 0) m = hermite_faithful_modes(grid);
  if (m < 1 || m > n)
    throw std::invalid_argument("build_hermite_operator: basis size out of range");

  const auto B = weighted_hermite_basis(grid, m);
  OperatorMatrix A = OperatorMatrix::dense_real_sym(n);
  for (int i = 0; i < n; ++i) {
    const double* bi = B.data() + static_cast<size_t>(i) * m;
    for (int j = i; j < n; ++j) {
      const double* bj = B.data() + static_cast<size_t>(j) * m;
      double acc = 0.0;
      for (int k = 0; k < m; ++k) acc += bi[k] * (2.0 * k + 1.0) * bj[k];
      A.zr[static_cast<size_t>(i) * n + j] = acc;
      A.zr[static_cast<size_t>(j) * n + i] = acc;
    }
  }
  A.symmetrize();
  A.spectral_rank = m;
  return A;
}

std::pair<OperatorMatrix, OperatorMatrix> build_prolate_operator(double a, int m) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw std::invalid_argument("build_prolate_operator: a must be positive");
  if (m < 4)
    throw std::invalid_argument("build_prolate_operator: need at least 4 modes");

  auto block = [a, m](int start) {
    const int len = (m - start + 1) / 2;
    OperatorMatrix T = OperatorMatrix::sym_tridiag(len);
    for (int i = 0; i < len; ++i) {
      const int k = start + 2 * i;
      const double alo = (k > 0) ? legendre_alpha(k - 1) : 0.0;
      const double ahi = legendre_alpha(k);
      T.diag[i] = k * (k + 1.0) / (a * a) + a * a * (alo * alo + ahi * ahi);
      if (i + 1 < len)
        T.off[i] = a * a * legendre_alpha(k) * legendre_alpha(k + 1);
    }
    return T;
  };
  return {block(0), block(1)};
}

namespace {

// Dense m x m coefficient-space prolate matrix, merged from the two parity
// blocks (pentadiagonal: k couples to k and k+-2).
std::vector<double> prolate_coefficient_matrix(double a, int m) {
  std::vector<double> L(static_cast<size_t>(m) * m, 0.0);
  const auto blocks = build_prolate_operator(a, m);
  for (int start = 0; start < 2; ++start) {
    const OperatorMatrix& T = (start == 0) ? blocks.first : blocks.second;
    for (int i = 0; i < T.dim; ++i) {
      const int k = start + 2 * i;
      L[static_cast<size_t>(k) * m + k] = T.diag[i];
      if (i + 1 < T.dim) {
        L[static_cast<size_t>(k) * m + k + 2] = T.off[i];
        L[static_cast<size_t>(k + 2) * m + k] = T.off[i];
      }
    }
  }
  return L;
}

// Weighted Legendre basis on an interval grid, row-major n x m:
// entry (j,k) = sqrt(w_j) * Pbar_k(xi_j / a) / sqrt(a).
std::vector<double> weighted_legendre_basis(const QuadratureGrid& grid, int m) {
  const int n = grid.size();
  const double a = grid.domain.a;
  std::vector<double> u(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) u[j] = grid.nodes[j] / a;
  const auto rows = normalized_legendre(m, u);
  const double inv_sqrt_a = 1.0 / std::sqrt(a);
  std::vector<double> Phi(static_cast<size_t>(n) * m);
  for (int j = 0; j < n; ++j) {
    const double sw = std::sqrt(grid.weights[j]) * inv_sqrt_a;
    for (int k = 0; k < m; ++k)
      Phi[static_cast<size_t>(j) * m + k] = sw * rows[k][j];
  }
  return Phi;
}

}  // namespace

OperatorMatrix prolate_grid_operator(const QuadratureGrid& grid, int m) {
  require_kind(grid, DomainKind::Interval, "prolate_grid_operator");
  const int n = grid.size();
  if (m == 0) m = n / 2;
  if (m < 4 || m > n)
    throw std::invalid_argument("prolate_grid_operator: basis size out of range");

  const auto Phi = weighted_legendre_basis(grid, m);
  const auto L = prolate_coefficient_matrix(grid.domain.a, m);

  // W = Phi * L  (n x m), then A = W * Phi^T (n x n).
  std::vector<double> W(static_cast<size_t>(n) * m, 0.0);
  for (int j = 0; j < n; ++j) {
    const double* pj = Phi.data() + static_cast<size_t>(j) * m;
    double* wj = W.data() + static_cast<size_t>(j) * m;
    for (int k = 0; k < m; ++k) {
      const double pjk = pj[k];
      if (pjk == 0.0) continue;
      const double* lk = L.data() + static_cast<size_t>(k) * m;
      for (int q = 0; q < m; ++q) wj[q] += pjk * lk[q];
    }
  }
  OperatorMatrix A = OperatorMatrix::dense_real_sym(n);
  for (int i = 0; i < n; ++i) {
    const double* wi = W.data() + static_cast<size_t>(i) * m;
    for (int j = 0; j < n; ++j) {
      const double* pj = Phi.data() + static_cast<size_t>(j) * m;
      double acc = 0.0;
      for (int q = 0; q < m; ++q) acc += wi[q] * pj[q];
      A.zr[static_cast<size_t>(i) * n + j] = acc;
    }
  }
  A.symmetrize();
  A.spectral_rank = m;
  return A;
}

namespace {

// Shared hat-function assembly: given mesh points (the degrees of freedom),
// optional phantom endpoints at +-a that carry the value zero, and lumped
// masses, produce the weighted tridiagonal operator.
OperatorMatrix assemble_fd_prolate(double a, const std::vector<double>& mesh,
                                   const std::vector<double>& lumped,
                                   bool end_elements) {
  const int n = static_cast<int>(mesh.size());
  std::vector<double> diag(static_cast<size_t>(n), 0.0);
  std::vector<double> off(static_cast<size_t>(n) - 1, 0.0);
  auto p = [a](double x) { return 1.0 - x * x / (a * a); };
  auto element = [&p](double xl, double xr) {
    const double h = xr - xl;
    // p is quadratic, so Simpson integrates it exactly over the element.
    const double ip = (h / 6.0) * (p(xl) + 4.0 * p(0.5 * (xl + xr)) + p(xr));
    return ip / (h * h);
  };
  for (int e = 0; e + 1 < n; ++e) {
    const double k = element(mesh[e], mesh[e + 1]);
    diag[e] += k;
    diag[e + 1] += k;
    off[e] -= k;
  }
  if (end_elements) {
    // The phantom nodes at +-a hold the value zero; only the diagonal of the
    // adjacent interior node survives.
    diag[0] += element(-a, mesh[0]);
    diag[n - 1] += element(mesh[n - 1], a);
  }
  for (int i = 0; i < n; ++i) diag[i] += lumped[i] * mesh[i] * mesh[i];

  OperatorMatrix T = OperatorMatrix::sym_tridiag(n);
  for (int i = 0; i < n; ++i) T.diag[i] = diag[i] / lumped[i];
  for (int i = 0; i + 1 < n; ++i)
    T.off[i] = off[i] / std::sqrt(lumped[i] * lumped[i + 1]);
  return T;
}

}  // namespace

OperatorMatrix fd_prolate_operator(const QuadratureGrid& grid, bool dirichlet_rows) {
  require_kind(grid, DomainKind::Interval, "fd_prolate_operator");
  OperatorMatrix T =
      assemble_fd_prolate(grid.domain.a, grid.nodes, grid.weights, dirichlet_rows);
  T.spectral_rank = grid.size() / 2;
  return T;
}

std::vector<double> fd_prolate_eigenvalues(double a, int n_eigs) {
  if (!(a > 0.0) || n_eigs < 1)
    throw std::invalid_argument("fd_prolate_eigenvalues: bad arguments");

  auto level = [a, n_eigs](int cells) {
    const int pts = cells + 1;
    const double h = 2.0 * a / cells;
    std::vector<double> mesh(static_cast<size_t>(pts));
    for (int i = 0; i < pts; ++i) mesh[i] = -a + h * i;
    mesh[pts - 1] = a;  // exact endpoint despite accumulation
    std::vector<double> lumped(static_cast<size_t>(pts), h);
    lumped[0] = lumped[pts - 1] = 0.5 * h;
    const OperatorMatrix T = assemble_fd_prolate(a, mesh, lumped, false);
    std::vector<double> vals = tridiagonal_eigenvalues(T.diag, T.off);
    vals.resize(static_cast<size_t>(n_eigs));
    return vals;
  };

  const auto e1 = level(1024);
  const auto e2 = level(2048);
  const auto e3 = level(4096);
  std::vector<double> out(static_cast<size_t>(n_eigs));
  for (int i = 0; i < n_eigs; ++i) {
    // Two Richardson passes in h^2: kills the h^2 and h^4 error terms.
    const double r1 = (4.0 * e2[i] - e1[i]) / 3.0;
    const double r2 = (4.0 * e3[i] - e2[i]) / 3.0;
    out[i] = (16.0 * r2 - r1) / 15.0;
  }
  return out;
}

OperatorMatrix build_semiaxis_operator(const QuadratureGrid& grid) {
  require_kind(grid, DomainKind::Semiaxis, "build_semiaxis_operator");
  const int n = grid.size();
  std::vector<double> diag(static_cast<size_t>(n), 0.0);
  std::vector<double> off(static_cast<size_t>(n) - 1, 0.0);
  for (int e = 0; e + 1 < n; ++e) {
    const double xl = grid.nodes[e], xr = grid.nodes[e + 1];
    const double h = xr - xl;
    const double k = (xr * xr * xr - xl * xl * xl) / (3.0 * h * h);
    diag[e] += k;
    diag[e + 1] += k;
    off[e] -= k;
  }
  OperatorMatrix A = OperatorMatrix::dense_real_sym(n);
  for (int i = 0; i < n; ++i) {
    A.zr[static_cast<size_t>(i) * n + i] = diag[i] / grid.weights[i];
    if (i + 1 < n) {
      const double v = off[i] / std::sqrt(grid.weights[i] * grid.weights[i + 1]);
      A.zr[static_cast<size_t>(i) * n + i + 1] = v;
      A.zr[static_cast<size_t>(i + 1) * n + i] = v;
    }
  }
  A.symmetrize();
  return A;
}

cplx apply_diffop_pointwise(const DiffOpSpec& spec, const SmoothFn& x, double t) {
  if (!std::isfinite(t))
    throw std::invalid_argument("apply_diffop_pointwise: t must be finite");
  switch (spec.kind) {
    case DiffOpKind::Hermite:
      return -x.ddf(t) + t * t * x.f(t);
    case DiffOpKind::Prolate: {
      if (!(spec.a > 0.0))
        throw std::invalid_argument("apply_diffop_pointwise: prolate needs a > 0");
      const double aa = spec.a * spec.a;
      return -(1.0 - t * t / aa) * x.ddf(t) + (2.0 * t / aa) * x.df(t) +
             t * t * x.f(t);
    }
    case DiffOpKind::Semiaxis:
      return -t * t * x.ddf(t) - 2.0 * t * x.df(t);
  }
  throw std::logic_error("apply_diffop_pointwise: unreachable");
}

namespace {
cplx phase(double t, double xi) { return cplx(std::cos(t * xi), std::sin(t * xi)); }
}

std::pair<cplx, cplx> boundary_terms_interval(const SmoothFn& x, double a,
                                              double t, double eps) {
  if (!(eps > 0.0) || !(eps < a))
    throw std::invalid_argument("boundary_terms_interval: need 0 < eps < a");
  cplx first(0.0), second(0.0);
  for (int s = -1; s <= 1; s += 2) {
    const double xi = s * (a - eps);
    const double coeff = 1.0 - xi * xi / (a * a);
    const cplx e = phase(t, xi);
    first += static_cast<double>(s) * (-coeff * x.df(xi) * e);
    second += static_cast<double>(s) * (cplx(0.0, t) * coeff * x.f(xi) * e);
  }
  return {first, second};
}

std::pair<cplx, cplx> boundary_terms_semiaxis(const SmoothFn& x, double t,
                                              double eps, double N) {
  if (!(eps > 0.0) || !(eps < N))
    throw std::invalid_argument("boundary_terms_semiaxis: need 0 < eps < N");
  auto first_at = [&x, t](double xi) { return -xi * xi * x.df(xi) * phase(t, xi); };
  auto second_at = [&x, t](double xi) {
    return cplx(0.0, t) * xi * xi * x.f(xi) * phase(t, xi);
  };
  return {first_at(N) - first_at(eps), second_at(N) - second_at(eps)};
}

namespace {

// Convergence-to-zero verdict for a bracket-term sequence: the extrapolated
// limit must be below 1e-6 and the rawest sample must already be small, so an
// oscillating non-convergent sequence cannot fake a zero limit.
bool settles_to_zero(const std::function<cplx(double)>& g, double eps0, int terms) {
  const LimitEstimate est = limit_at_zero(g, eps0, terms);
  return std::abs(est.value) <= 1e-6 && std::abs(est.last_raw) <= 1e-2;
}

}  // namespace

BoundaryTermReport sweep_boundary_terms_interval(const SmoothFn& x, double a,
                                                 double t, int terms) {
  BoundaryTermReport rep;
  double eps = 1e-2;
  for (int k = 0; k < terms; ++k) {
    const auto [first, second] = boundary_terms_interval(x, a, t, eps);
    rep.epsilon_sequence.push_back(eps);
    rep.first_term_values.push_back(first);
    rep.second_term_values.push_back(second);
    eps *= 0.5;
  }
  rep.first_converges_to_zero = settles_to_zero(
      [&](double e) { return boundary_terms_interval(x, a, t, e).first; }, 1e-2,
      terms);
  rep.second_converges_to_zero = settles_to_zero(
      [&](double e) { return boundary_terms_interval(x, a, t, e).second; }, 1e-2,
      terms);
  return rep;
}

BoundaryTermReport sweep_boundary_terms_semiaxis(const SmoothFn& x, double t,
                                                 int terms) {
  BoundaryTermReport rep;
  // Both limits march together: the inner endpoint halves while the outer
  // endpoint doubles away from the same sweep parameter.
  auto outer = [](double e) { return 8.0 * (1e-2 / e); };
  auto first_of = [&](double e) {
    return boundary_terms_semiaxis(x, t, e, outer(e)).first;
  };
  auto second_of = [&](double e) {
    return boundary_terms_semiaxis(x, t, e, outer(e)).second;
  };
  double eps = 1e-2;
  for (int k = 0; k < terms; ++k) {
    rep.epsilon_sequence.push_back(eps);
    rep.first_term_values.push_back(first_of(eps));
    rep.second_term_values.push_back(second_of(eps));
    eps *= 0.5;
  }
  rep.first_converges_to_zero = settles_to_zero(first_of, 1e-2, terms);
  rep.second_converges_to_zero = settles_to_zero(second_of, 1e-2, terms);
  return rep;
}

std::vector<Claim> check_endpoint_conditions(const SmoothFn& x,
                                             const DomainSpec& domain) {
  std::vector<Claim> claims;
  auto add_limit = [&claims](std::string id, std::string anchor,
                             const LimitEstimate& est) {
    const double v = std::abs(est.value);
    claims.push_back(Claim{std::move(id), std::move(anchor), v, 1e-6, v <= 1e-6});
  };

  switch (domain.kind) {
    case DomainKind::FullLine: {
      auto xf = [&x](double s) { return x.f(s); };
      auto xdf = [&x](double s) { return x.df(s); };
      add_limit("x_at_plus_inf", "x(xi) -> 0 as xi -> +inf",
                limit_at_infinity(xf, 2.0));
      add_limit("x_at_minus_inf", "x(xi) -> 0 as xi -> -inf",
                limit_at_infinity([&x](double s) { return x.f(-s); }, 2.0));
      add_limit("dx_at_plus_inf", "x'(xi) -> 0 as xi -> +inf",
                limit_at_infinity(xdf, 2.0));
      add_limit("dx_at_minus_inf", "x'(xi) -> 0 as xi -> -inf",
                limit_at_infinity([&x](double s) { return x.df(-s); }, 2.0));
      break;
    }
    case DomainKind::Interval: {
      const double a = domain.a;
      add_limit("edge_flux_upper", "(xi - a) x'(xi) -> 0 as xi -> a-",
                limit_at_zero(
                    [&x, a](double e) { return -e * x.df(a - e); }, 1e-2));
      add_limit("edge_flux_lower", "(xi + a) x'(xi) -> 0 as xi -> -a+",
                limit_at_zero(
                    [&x, a](double e) { return e * x.df(-a + e); }, 1e-2));
      break;
    }
    case DomainKind::Semiaxis: {
      add_limit("xi2_x_at_zero", "xi^2 x(xi) -> 0 as xi -> 0+",
                limit_at_zero([&x](double e) { return e * e * x.f(e); }, 1e-2));
      add_limit("xi2_dx_at_zero", "xi^2 x'(xi) -> 0 as xi -> 0+",
                limit_at_zero([&x](double e) { return e * e * x.df(e); }, 1e-2));
      add_limit("xi2_x_at_inf", "xi^2 x(xi) -> 0 as xi -> +inf",
                limit_at_infinity([&x](double s) { return s * s * x.f(s); }, 8.0));
      add_limit("xi2_dx_at_inf", "xi^2 x'(xi) -> 0 as xi -> +inf",
                limit_at_infinity([&x](double s) { return s * s * x.df(s); }, 8.0));
      break;
    }
  }
  return claims;
}

bool log_bound_check(const SmoothFn& x, double a) {
  if (!(a > 0.0)) throw std::invalid_argument("log_bound_check: a must be positive");
  constexpr int kTerms = 12;
  double ratio[kTerms];
  // Start below 1 so ln(eps) never vanishes along the sequence.
  double eps = 0.5 * std::min(1.0, a);
  for (int k = 0; k < kTerms; ++k) {
    const double mag = std::max(std::abs(x.f(a - eps)), std::abs(x.f(-a + eps)));
    ratio[k] = mag / std::fabs(std::log(eps));
    eps *= 0.5;
  }
  // Bounded means the ratio stops growing; test the tail of the sequence
  // (the last four halvings span more than a decade of eps).
  for (int k = kTerms - 4; k < kTerms; ++k) {
    if (ratio[k] > ratio[k - 1] * (1.0 + 1e-9)) return false;
  }
  return true;
}

}  // namespace tfo
