#include "tfo/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using namespace tfo;

TEST_CASE("interval grid integrates polynomials at Gauss accuracy") {
  const QuadratureGrid g = build_grid(DomainSpec::interval(1.0), 8);
  REQUIRE(g.size() == 8);
  CHECK(g.symmetric);

  double mass = 0.0, xi2 = 0.0, xi14 = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    mass += g.weights[i];
    xi2 += g.weights[i] * g.nodes[i] * g.nodes[i];
    xi14 += g.weights[i] * std::pow(g.nodes[i], 14);
  }
  // An 8-point rule is exact through degree 15.
  CHECK(mass == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(xi2 == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(xi14 == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
}

TEST_CASE("symmetric grids mirror exactly, not merely approximately") {
  for (const DomainSpec& d :
       {DomainSpec::interval(2.0), DomainSpec::full_line(6.0)}) {
    const QuadratureGrid g = build_grid(d, 32);
    for (int i = 0; i < g.size(); ++i) {
      // Bitwise equality is the contract here; the parity identities
      // downstream lose their exact-zero property without it.
      CHECK(g.nodes[i] == -g.nodes[g.rev(i)]);
      CHECK(g.weights[i] == g.weights[g.rev(i)]);
    }
    for (int i = 0; i + 1 < g.size(); ++i) CHECK(g.nodes[i] < g.nodes[i + 1]);
    for (double w : g.weights) CHECK(w > 0.0);
  }
}

TEST_CASE("full-line grid captures a Gaussian integral") {
  // The default truncation radius grows with n to keep Gaussian tails below
  // rounding at the edge; it must at least cover the standard bell.
  CHECK(build_grid(DomainSpec::full_line(), 64).domain.cutoff >= 8.0);

  const QuadratureGrid g = build_grid(DomainSpec::full_line(8.0), 64);
  double total = 0.0;
  for (int i = 0; i < g.size(); ++i)
    total += g.weights[i] * std::exp(-g.nodes[i] * g.nodes[i]);
  CHECK(total == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
}

TEST_CASE("semiaxis grid clusters near zero and integrates decay") {
  const QuadratureGrid g = build_grid(DomainSpec::semiaxis(), 64);
  CHECK_FALSE(g.symmetric);
  CHECK(g.nodes.front() > 0.0);
  CHECK(g.nodes.front() < 1e-2);  // grading pushes nodes into the corner
  for (int i = 0; i + 1 < g.size(); ++i) CHECK(g.nodes[i] < g.nodes[i + 1]);

  double total = 0.0, second = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    total += g.weights[i] * std::exp(-g.nodes[i]);
    second += g.weights[i] * g.nodes[i] * g.nodes[i] * std::exp(-g.nodes[i]);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(second == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("grid construction rejects unusable parameters") {
  CHECK_THROWS_AS(build_grid(DomainSpec::interval(1.0), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_grid(DomainSpec::interval(1.0), 33),
                  std::invalid_argument);  // symmetric grids pair their nodes
  CHECK_THROWS_AS(build_grid(DomainSpec::interval(-1.0), 16),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_grid(DomainSpec::interval(0.0), 16),
                  std::invalid_argument);
}

TEST_CASE("even/odd projection splits and reconstructs") {
  const QuadratureGrid g = build_grid(DomainSpec::interval(1.0), 16);
  SampledFunction f;
  f.grid = &g;
  f.values = weighted_samples(g, [](double t) { return t * t * t + 0.25; });

  const auto [even, odd] = project_even_odd(f);
  for (int i = 0; i < g.size(); ++i) {
    CHECK(std::abs(even.values[i] - even.values[g.rev(i)]) < 1e-16);
    CHECK(std::abs(odd.values[i] + odd.values[g.rev(i)]) < 1e-16);
    CHECK(std::abs(even.values[i] + odd.values[i] - f.values[i]) < 1e-16);
  }
}

TEST_CASE("inner product reproduces the L2 pairing") {
  const QuadratureGrid g = build_grid(DomainSpec::interval(1.0), 24);
  SampledFunction one, poly;
  one.grid = poly.grid = &g;
  one.values = weighted_samples(g, [](double) { return 1.0; });
  poly.values = weighted_samples(g, [](double t) { return t * t; });

  const auto self = inner_product(one, one);
  const auto mixed = inner_product(one, poly);
  CHECK(self.real() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::abs(self.imag()) < 1e-18);
  CHECK(mixed.real() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}
