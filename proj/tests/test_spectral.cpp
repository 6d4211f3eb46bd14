#include "tfo/spectral.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "tfo/fourier.hpp"
#include "tfo/grid.hpp"

using namespace tfo;

namespace {

// Frozen joint spectrum at a = 1: chi from the Legendre blocks, mu from the
// Gram Rayleigh quotients. Values cross-checked against the finite-element
// eigenvalue route and stable under both basis and grid refinement.
const std::vector<double> kChi = {
    0.319000055147,  2.593084579977,  6.533471800524,  12.514462145094,
    20.508274362571, 30.505404625322, 42.503818126958, 56.502844502397};
const std::vector<double> kMu = {
    5.725817806378952e-01, 6.279127414980334e-02, 1.237479328466008e-03,
    9.200977049563680e-06, 3.717928558276827e-08, 9.491436740195620e-11,
    1.671497032001218e-13, 2.149902767265325e-16};

int sign_changes(const SampledFunction& s) {
  double ceiling = 0.0;
  for (const cplx& v : s.values) ceiling = std::max(ceiling, std::fabs(v.real()));
  int flips = 0;
  double prev = 0.0;
  for (const cplx& v : s.values) {
    const double re = v.real();
    if (std::fabs(re) < 1e-10 * ceiling) continue;
    if (prev != 0.0 && ((re > 0.0) != (prev > 0.0))) ++flips;
    prev = re;
  }
  return flips;
}

}  // namespace

TEST_CASE("joint eigenstructure at a = 1 reproduces the frozen spectrum") {
  const PswfSet set = compute_pswf(1.0, 8, 64);
  REQUIRE(set.modes.size() == 8);
  const int n = set.grid->size();

  for (int k = 0; k < 8; ++k) {
    const PswfMode& m = set.modes[k];
    CHECK(m.index == k);
    CHECK(std::abs(m.chi - kChi[k]) < 1e-9);
    CHECK(std::abs(m.mu - kMu[k]) < 1e-12);
    CHECK(m.defect < 1e-12);
    // The squared Fourier eigenvalue and the Gram eigenvalue are two routes
    // to the same number.
    CHECK(std::abs(std::norm(m.lambda) - m.mu) < 1e-12);
    // Eigenvalues walk the axes in quarter turns: lambda_k = i^k rho_k.
    const cplx rot = (k % 4 == 0)   ? cplx(1, 0)
                     : (k % 4 == 1) ? cplx(0, 1)
                     : (k % 4 == 2) ? cplx(-1, 0)
                                    : cplx(0, -1);
    CHECK(std::abs(m.lambda - rot * std::sqrt(kMu[k])) < 1e-8);
    // chi order interleaves the parities and the samples really carry them.
    CHECK(m.parity == (k % 2 == 0 ? Parity::Even : Parity::Odd));
    const double ps = (k % 2 == 0) ? 1.0 : -1.0;
    for (int j = 0; j < n; ++j)
      CHECK(std::abs(m.samples.values[j] - ps * m.samples.values[n - 1 - j]) < 1e-8);
    // Sturm oscillation: the k-th mode changes sign exactly k times.
    CHECK(sign_changes(m.samples) == k);
  }
}

TEST_CASE("mode computation rejects impossible requests") {
  CHECK_THROWS_AS(compute_pswf(0.0, 4, 64), std::invalid_argument);
  CHECK_THROWS_AS(compute_pswf(-1.0, 4, 64), std::invalid_argument);
  CHECK_THROWS_AS(compute_pswf(1.0, 0, 64), std::invalid_argument);
  CHECK_THROWS_AS(compute_pswf(1.0, 17, 64), std::invalid_argument);
}

TEST_CASE("operator norm equals the square root of the top Gram eigenvalue") {
  const QuadratureGrid g = build_grid(DomainSpec::interval(1.0), 64);
  const OperatorMatrix F = build_truncated_fourier(g);
  CHECK(std::abs(fourier_norm2(F) - std::sqrt(kMu[0])) < 1e-10);
}

TEST_CASE("cross-spectrum verifier separates axis points from strays") {
  SpectralReport ok = verify_cross_spectrum({cplx(0.5, 0.0), cplx(0.0, -0.25),
                                             cplx(-1.0, 0.0)});
  CHECK(ok.all_pass());

  SpectralReport astray = verify_cross_spectrum({cplx(0.5, 0.5)});
  CHECK_FALSE(astray.all_pass());
  REQUIRE(astray.claims.size() == 2);
  CHECK(astray.claims[0].id == "cross_distance_0");
  CHECK_FALSE(astray.claims[0].pass);
  CHECK(astray.claims[0].value == doctest::Approx(0.5));

  SpectralReport inflated = verify_cross_spectrum({cplx(1.5, 0.0)});
  CHECK_FALSE(inflated.all_pass());
  CHECK(inflated.claims[1].id == "modulus_0");
  CHECK_FALSE(inflated.claims[1].pass);
}

TEST_CASE("degenerate eigenvalues are reported as not applicable") {
  PswfSet fake;
  fake.a = 1.0;
  PswfMode m0, m1;
  m0.mu = 0.25;
  m0.lambda = cplx(0.5, 0.0);
  m1.mu = 0.25;  // zero gap to its neighbor
  m1.lambda = cplx(0.0, 0.5);
  fake.modes = {m0, m1};
  const SpectralReport rep = verify_multiplicity_assignment(fake);
  REQUIRE(rep.claims.size() == 2);
  for (const Claim& c : rep.claims) {
    CHECK(c.pass);
    CHECK(c.anchor == "not applicable (degenerate at tolerance)");
  }
}

TEST_CASE("well-separated eigenvalues get a definite phase assignment") {
  const PswfSet set = compute_pswf(1.0, 5, 64);
  const SpectralReport rep = verify_multiplicity_assignment(set);
  CHECK(rep.all_pass());
  int asserted = 0;
  for (const Claim& c : rep.claims)
    if (c.anchor == "exactly one of {i^k rho} is an eigenvalue") ++asserted;
  CHECK(asserted == 5);
}

TEST_CASE("reduction suite needs mirror symmetry, gram detects its loss") {
  const QuadratureGrid half = build_grid(DomainSpec::semiaxis(), 16);
  CHECK_THROWS_AS(verify_symmetric_reduction(half), std::invalid_argument);

  QuadratureGrid nudged = build_grid(DomainSpec::interval(1.0), 16);
  nudged.nodes[3] += 1e-4;  // silently break the mirror, flag still set
  const OperatorMatrix F = build_truncated_fourier(nudged);
  CHECK_THROWS_AS(build_gram(F), std::runtime_error);
}

TEST_CASE("reduction suite passes on a clean symmetric grid") {
  const SpectralReport rep = verify_symmetric_reduction(
      build_grid(DomainSpec::interval(1.0), 32), 123);
  CHECK(rep.all_pass());
  CHECK(rep.seed == 123);
}

TEST_CASE("Hermite pair commutes after mode filtering") {
  const QuadratureGrid g = build_grid(DomainSpec::full_line(8.0), 200);
  const OperatorMatrix L = build_hermite_operator(g);
  const OperatorMatrix F = build_truncated_fourier(g);
  const CommutatorMeasurement m = measure_commutator(L, F, 42);
  CHECK(m.rank == 14);
  CHECK(m.filter_count == 7);
  CHECK(m.filtered < 1e-9);
  CHECK(m.unfiltered > m.filtered);
}

TEST_CASE("function-level check stops at failed preconditions") {
  // 1/(a - xi) violates the endpoint conditions at the upper edge, so the
  // quadrature comparison must not run at all.
  const double a = 1.0;
  const SmoothFn pole{[a](double s) { return cplx(1.0 / (a - s)); },
                      [a](double s) { return cplx(1.0 / ((a - s) * (a - s))); },
                      [a](double s) {
                        return cplx(2.0 / ((a - s) * (a - s) * (a - s)));
                      }};
  const SpectralReport rep = verify_commutation_on_function(
      DiffOpSpec::prolate(a), pole, {0.0, 0.5}, 1e-6);
  CHECK_FALSE(rep.all_pass());
  REQUIRE(!rep.claims.empty());
  for (const Claim& c : rep.claims) {
    CHECK(c.id.rfind("precondition_", 0) == 0);
    CHECK(c.id != "max_residual");
  }
}

TEST_CASE("convergence studies validate their size lists") {
  CHECK_THROWS_AS(convergence_study(DiffOpSpec::hermite(), {24, 48}),
                  std::invalid_argument);
  CHECK_THROWS_AS(convergence_study(DiffOpSpec::hermite(), {48, 24, 96}),
                  std::invalid_argument);
  CHECK_THROWS_AS(convergence_study(DiffOpSpec::semiaxis(), {24, 48, 96}),
                  std::invalid_argument);
}
