#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "tfo/grid.hpp"
#include "tfo/matrix.hpp"
#include "tfo/report.hpp"

namespace tfo {

enum class DiffOpKind { Hermite, Prolate, Semiaxis };

struct DiffOpSpec {
  DiffOpKind kind = DiffOpKind::Hermite;
  double a = 0.0;  // interval half-width, Prolate only

  static DiffOpSpec hermite() { return {DiffOpKind::Hermite, 0.0}; }
  static DiffOpSpec prolate(double a) { return {DiffOpKind::Prolate, a}; }
  static DiffOpSpec semiaxis() { return {DiffOpKind::Semiaxis, 0.0}; }
};

// Analytic test function handle: value and first two derivatives. The
// boundary and function-level checks differentiate nothing numerically; the
// caller supplies exact derivatives.
struct SmoothFn {
  std::function<cplx(double)> f;
  std::function<cplx(double)> df;
  std::function<cplx(double)> ddf;
};

// -d^2/dt^2 + t^2 in grid space: assembled as B diag(1,3,5,...) B^T from the
// first m orthonormal Hermite functions sampled on the grid (weighted). With
// m = 0 the basis size is chosen automatically as the largest m for which
// (2m-1) * max|B^T B - I| over the leading m x m block stays below 2.5e-10,
// i.e. every retained mode is resolved well enough on this grid that the
// assembled spectrum {1,3,...,2m-1} is trustworthy to about 1e-9. The chosen
// m is recorded in spectral_rank.
OperatorMatrix build_hermite_operator(const QuadratureGrid& grid, int m = 0);

// The automatic basis-size rule above, exposed on its own.
int hermite_faithful_modes(const QuadratureGrid& grid);

// Galerkin matrix of -d/dxi[(1-xi^2/a^2) d/dxi] + xi^2 on (-a,a) in
// L2-normalized Legendre polynomials of degrees 0..m-1. The derivative part
// is diagonal (k(k+1)/a^2), the xi^2 part couples k with k+-2, so the matrix
// splits by degree parity into two tridiagonal blocks, returned as
// (even-degree block, odd-degree block).
std::pair<OperatorMatrix, OperatorMatrix> build_prolate_operator(double a, int m);

// The same operator pushed to grid samples, Phi L Phi^T with Phi the
// weighted evaluation of the Legendre basis on the grid's interval. m = 0
// picks n/2 basis functions. spectral_rank = m.
OperatorMatrix prolate_grid_operator(const QuadratureGrid& grid, int m = 0);

// Hat-function discretization of the prolate operator on the grid's own
// nodes, mass lumped with the quadrature weights. With dirichlet_rows the
// mesh gains end elements that pin the function to zero at +-a; that is a
// genuinely different selfadjoint realization of the same expression and
// serves as the negative control in the commutation suites. Without it the
// degenerate coefficient kills the boundary flux on its own.
// spectral_rank = n/2 (upper half of an n-point mesh spectrum is noise).
OperatorMatrix fd_prolate_operator(const QuadratureGrid& grid, bool dirichlet_rows);

// Independent eigenvalue oracle for the prolate operator: lowest n_eigs
// eigenvalues of the hat-function discretization on uniform meshes of
// 1024, 2048, 4096 cells, extrapolated twice in h^2.
std::vector<double> fd_prolate_eigenvalues(double a, int n_eigs);

// -d/dxi(xi^2 d/dxi) on a semiaxis grid through the symmetric weak form
// (element integrals of xi^2 phi_j' phi_k' between consecutive nodes), in
// weighted coordinates. Dense symmetric storage; content is tridiagonal.
OperatorMatrix build_semiaxis_operator(const QuadratureGrid& grid);

// The differential expression itself, evaluated from supplied derivatives:
//   Hermite:  -x'' + t^2 x
//   Prolate:  -(1-t^2/a^2) x'' + (2t/a^2) x' + t^2 x
//   Semiaxis: -t^2 x'' - 2t x'
// All three expressions extend to every finite real t; non-finite t throws.
cplx apply_diffop_pointwise(const DiffOpSpec& spec, const SmoothFn& x, double t);

// Integration-by-parts bracket values, oriented upper-endpoint minus
// lower-endpoint. Interval version evaluates at xi = +-(a - eps):
//   first  = -(1 - xi^2/a^2) x'(xi) e^{i t xi}
//   second = i t (1 - xi^2/a^2) x(xi) e^{i t xi}
std::pair<cplx, cplx> boundary_terms_interval(const SmoothFn& x, double a,
                                              double t, double eps);

// Semiaxis version, bracket from xi = eps to xi = N:
//   first  = -xi^2 x'(xi) e^{i t xi}
//   second = i t xi^2 x(xi) e^{i t xi}
std::pair<cplx, cplx> boundary_terms_semiaxis(const SmoothFn& x, double t,
                                              double eps, double N);

struct BoundaryTermReport {
  std::vector<double> epsilon_sequence;  // strictly decreasing, positive
  std::vector<cplx> first_term_values;
  std::vector<cplx> second_term_values;
  bool first_converges_to_zero = false;
  bool second_converges_to_zero = false;
};

// Evaluates the bracket terms along a halving eps sequence (the semiaxis
// sweep simultaneously grows the outer endpoint geometrically) and settles
// the convergence verdicts by extrapolation.
BoundaryTermReport sweep_boundary_terms_interval(const SmoothFn& x, double a,
                                                 double t, int terms = 12);
BoundaryTermReport sweep_boundary_terms_semiaxis(const SmoothFn& x, double t,
                                                 int terms = 12);

// Endpoint limits a function must satisfy to sit in the commuting operator's
// domain on the given domain kind; one claim per limit, each extrapolated on
// a geometric sequence and passed at 1e-6.
std::vector<Claim> check_endpoint_conditions(const SmoothFn& x,
                                             const DomainSpec& domain);

// Does |x| stay within a multiple of |ln(distance)| approaching +-a?
// Samples a halving approach and requires the ratio |x|/|ln dist| to stop
// growing over the tail of the sequence.
bool log_bound_check(const SmoothFn& x, double a);

}  // namespace tfo
