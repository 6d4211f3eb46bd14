#pragma once

#include <cstdint>
#include <vector>

#include "tfo/report.hpp"

namespace tfo {

// Canned verification suites at fixed desk-scale parameters. Each returns a
// report whose all_pass() is the headline verdict; the command-line front end
// and the acceptance runner both consume these, so the parameters live here
// and nowhere else.

// Reflection algebra on an interval grid: J^2 = I exactly, FJ = JF and
// F* = FJ to near machine precision.
SpectralReport suite_parity();

// Full even/odd reduction identity set (cosine/sine splitting, Cartesian
// parts, squared restriction) with seeded random parity vectors.
SpectralReport suite_reduction(std::uint64_t seed = 0);

// Gram spectra for three half-widths stay inside [0, 1] up to 1e-10 slop.
SpectralReport suite_gram_spectrum();

// Fourier eigenvalues of the first prolate modes sit on the axis cross,
// |lambda|^2 reproduces the Gram eigenvalue, and each simple Gram eigenvalue
// is realized by exactly one fourth-root rotation.
SpectralReport suite_cross_and_multiplicity();

// mu spectrum computed two independent ways (Gram diagonalization vs the
// commuting-operator pipeline) agrees to 1e-8, and is grid-converged at
// n = 64 against n = 128 to 1e-9.
SpectralReport suite_two_route();

// Filtered commutator residuals of the Hermite and prolate pairs at 1e-8,
// plus the Dirichlet-pinned discretization as a negative control that must
// stay loud.
SpectralReport suite_commutator(std::uint64_t seed = 0);

// Function-level commutation for one analytic function per domain, verified
// by quadrature on both sides of the identity.
SpectralReport suite_function_level();

// Endpoint-condition checks: passing functions on all three domains,
// violators flagged, the log-growth bound, and the integration-by-parts
// bracket sweeps including the nonzero-limit logarithm case.
SpectralReport suite_boundary();

// Hermite functions as eigenvectors of the discretized Fourier operator with
// eigenvalues i^n, checked entrywise for n = 0..10.
SpectralReport suite_hermite_eigen();

// Grid-refinement studies: Hermite and prolate commutator residuals fall by
// 10x per refinement (or sit at their floors), and the exactly commuting
// reflection pair stays at rounding floor throughout.
SpectralReport suite_convergence(std::uint64_t seed = 0);

// All of the above, in the order listed.
std::vector<SpectralReport> run_all_suites(std::uint64_t seed = 0);

}  // namespace tfo
