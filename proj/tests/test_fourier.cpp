#include "tfo/fourier.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"
#include "tfo/grid.hpp"

using namespace tfo;

TEST_CASE("Gaussian maps to itself through the discretized transform") {
  // (2pi)^{-1/2} integral of e^{i t xi} e^{-xi^2/2} dxi = e^{-t^2/2}, so the
  // matrix applied to the weighted Gaussian samples must return them.
  const QuadratureGrid g = build_grid(DomainSpec::full_line(8.0), 200);
  const OperatorMatrix F = build_truncated_fourier(g);
  const auto v = weighted_samples(g, [](double t) { return std::exp(-0.5 * t * t); });
  const auto fv = F.apply(v);
  for (int j = 0; j < g.size(); ++j)
    CHECK(std::abs(fv[j] - v[j]) < 1e-10);
}

TEST_CASE("constant on an interval maps to the sinc shape") {
  const double a = 1.0;
  const QuadratureGrid g = build_grid(DomainSpec::interval(a), 64);
  const OperatorMatrix F = build_truncated_fourier(g);
  const auto v = weighted_samples(g, [](double) { return 1.0; });
  const auto fv = F.apply(v);
  // (2pi)^{-1/2} integral_{-a}^{a} e^{i t xi} dxi = sqrt(2/pi) sin(a t)/t.
  // Symmetric grids of even size have no node at t = 0.
  for (int j = 0; j < g.size(); ++j) {
    const double t = g.nodes[j];
    const double expected =
        std::sqrt(2.0 / M_PI) * std::sin(a * t) / t * std::sqrt(g.weights[j]);
    CHECK(std::abs(fv[j] - expected) < 1e-12);
  }
}

TEST_CASE("Gram matrix carries the sinc kernel") {
  const double a = 1.3;
  const QuadratureGrid g = build_grid(DomainSpec::interval(a), 32);
  const OperatorMatrix G = build_gram(build_truncated_fourier(g));
  REQUIRE(G.storage == Storage::DenseRealSym);
  // (F*F)[j,k] = sqrt(w_j w_k) sin(a (t_j - t_k)) / (pi (t_j - t_k)),
  // with the diagonal reading a/pi * w_j.
  for (int j = 0; j < g.size(); ++j)
    for (int k = 0; k < g.size(); ++k) {
      const double sw = std::sqrt(g.weights[j] * g.weights[k]);
      const double dt = g.nodes[j] - g.nodes[k];
      const double kernel =
          (j == k) ? a / M_PI : std::sin(a * dt) / (M_PI * dt);
      CHECK(std::abs(G.r(j, k) - sw * kernel) < 1e-14);
    }
}

TEST_CASE("adjoint is an involution and matches the kernel conjugate") {
  const QuadratureGrid g = build_grid(DomainSpec::interval(1.0), 16);
  const OperatorMatrix F = build_truncated_fourier(g);
  const OperatorMatrix Fs = build_adjoint(F);
  CHECK(max_abs_diff(build_adjoint(Fs), F) == 0.0);
  for (int j = 0; j < g.size(); ++j)
    for (int k = 0; k < g.size(); ++k)
      CHECK(Fs.c(j, k) == std::conj(F.c(k, j)));
}

TEST_CASE("cosine and sine blocks recompose the full kernel") {
  const QuadratureGrid g = build_grid(DomainSpec::interval(0.7), 16);
  const OperatorMatrix F = build_truncated_fourier(g);
  const OperatorMatrix C = build_cosine_transform(g);
  const OperatorMatrix S = build_sine_transform(g);
  REQUIRE(C.storage == Storage::DenseRealSym);
  REQUIRE(S.storage == Storage::DenseRealSym);
  for (int j = 0; j < g.size(); ++j)
    for (int k = 0; k < g.size(); ++k)
      CHECK(std::abs(F.c(j, k) - cplx(C.r(j, k), S.r(j, k))) < 1e-16);
}

TEST_CASE("symmetry-dependent builders refuse asymmetric grids") {
  const QuadratureGrid half = build_grid(DomainSpec::semiaxis(), 16);
  CHECK_THROWS_AS(build_parity(half), std::invalid_argument);
  CHECK_THROWS_AS(build_cosine_transform(half), std::invalid_argument);
  CHECK_THROWS_AS(build_sine_transform(half), std::invalid_argument);
}

TEST_CASE("gram builder rejects a kernel that lost its symmetry") {
  const QuadratureGrid g = build_grid(DomainSpec::interval(1.0), 16);
  OperatorMatrix F = build_truncated_fourier(g);
  CHECK_NOTHROW(build_gram(F));
  // A single perturbed entry leaves an imaginary residue in F*F far above
  // the rounding ceiling, which must be reported rather than dropped.
  F.c(3, 5) += cplx(1e-6, 1e-6);
  CHECK_THROWS_AS(build_gram(F), std::runtime_error);
}
