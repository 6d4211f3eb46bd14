#include "tfo/quadrature.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"

using namespace tfo;
using namespace std::complex_literals;

TEST_CASE("adaptive rule handles closed forms on finite intervals") {
  const cplx cubic = integrate([](double x) { return cplx(x * x * x); }, 0.0, 1.0);
  CHECK(std::abs(cubic - 0.25) < 1e-15);

  const cplx sine = integrate([](double x) { return cplx(std::sin(x)); }, 0.0, M_PI);
  CHECK(std::abs(sine - 2.0) < 1e-13);

  // exp(ix) on [0,1] = sin(1) + i(1 - cos(1))
  const cplx osc = integrate([](double x) { return std::exp(1.0i * x); }, 0.0, 1.0);
  CHECK(std::abs(osc - cplx(std::sin(1.0), 1.0 - std::cos(1.0))) < 1e-14);
}

TEST_CASE("adaptive rule resolves a fast oscillation") {
  // cos(50x) over [0, 10]: value sin(500)/50
  const cplx v = integrate([](double x) { return cplx(std::cos(50.0 * x)); },
                           0.0, 10.0, 1e-13);
  CHECK(std::abs(v - std::sin(500.0) / 50.0) < 1e-12);
}

TEST_CASE("semiaxis integration truncates decaying tails correctly") {
  const cplx e1 = integrate_semiaxis([](double x) { return cplx(std::exp(-x)); });
  CHECK(std::abs(e1 - 1.0) < 1e-12);

  const cplx gamma3 =
      integrate_semiaxis([](double x) { return cplx(x * x * std::exp(-x)); });
  CHECK(std::abs(gamma3 - 2.0) < 1e-11);

  // Oscillatory decay: exp(-x) cos(3x) integrates to 1/10.
  const cplx damped = integrate_semiaxis(
      [](double x) { return cplx(std::exp(-x) * std::cos(3.0 * x)); });
  CHECK(std::abs(damped - 0.1) < 1e-11);
}

TEST_CASE("real-line integration recovers Gaussian moments") {
  const cplx mass =
      integrate_real_line([](double x) { return cplx(std::exp(-x * x)); });
  CHECK(std::abs(mass - std::sqrt(M_PI)) < 1e-12);

  const cplx second = integrate_real_line(
      [](double x) { return cplx(x * x * std::exp(-x * x)); });
  CHECK(std::abs(second - 0.5 * std::sqrt(M_PI)) < 1e-12);
}

TEST_CASE("limit extrapolation at zero") {
  // 1/(1 + eps) -> 1: a full power series in eps, evaluated without
  // cancellation, so the elimination should reach near machine accuracy.
  const LimitEstimate geo =
      limit_at_zero([](double e) { return cplx(1.0 / (1.0 + e)); }, 1e-2);
  CHECK(std::abs(geo.value - 1.0) < 1e-13);
  CHECK(geo.error_hint < 1e-9);

  // sin(eps)/eps -> 1.
  const LimitEstimate one =
      limit_at_zero([](double e) { return cplx(std::sin(e) / e); }, 1e-2);
  CHECK(std::abs(one.value - 1.0) < 1e-13);

  // A genuine divergence must come out loud, not masked by extrapolation.
  const LimitEstimate pole =
      limit_at_zero([](double e) { return cplx(1.0 / e); }, 1e-2);
  CHECK(std::abs(pole.value) > 1e3);
}

TEST_CASE("limit extrapolation at infinity") {
  const LimitEstimate v = limit_at_infinity(
      [](double s) { return cplx((s + 1.0) / (s + 2.0)); }, 2.0);
  CHECK(std::abs(v.value - 1.0) < 1e-11);

  const LimitEstimate grows =
      limit_at_infinity([](double s) { return cplx(std::sqrt(s)); }, 2.0);
  CHECK(std::abs(grows.value) > 10.0);
}
