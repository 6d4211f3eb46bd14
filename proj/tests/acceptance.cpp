// Gate runner: executes every verification suite at its contract-level
// parameters and prints one verdict line per suite, with wall time against
// the suite's budget. Exit status 0 only if every claim of every suite holds.
//
// Run with -v to see each claim's measured value next to its tolerance.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "tfo/report.hpp"
#include "tfo/suites.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Entry {
  const char* label;
  double budget_seconds;
  tfo::SpectralReport (*run)();
};

}  // namespace

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;

  const std::vector<Entry> entries = {
      {"reflection and adjoint identities", 1.0,
       +[] { return tfo::suite_parity(); }},
      {"even/odd reduction", 1.0, +[] { return tfo::suite_reduction(0); }},
      {"gram spectrum bounds", 2.0, +[] { return tfo::suite_gram_spectrum(); }},
      {"eigenvalue cross and multiplicity", 5.0,
       +[] { return tfo::suite_cross_and_multiplicity(); }},
      {"two-route mu spectrum", 10.0, +[] { return tfo::suite_two_route(); }},
      {"commuting pairs and control", 10.0,
       +[] { return tfo::suite_commutator(0); }},
      {"function-level commutation", 30.0,
       +[] { return tfo::suite_function_level(); }},
      {"boundary behavior", 2.0, +[] { return tfo::suite_boundary(); }},
      {"hermite eigenvectors", 5.0, +[] { return tfo::suite_hermite_eigen(); }},
      {"grid-refinement studies", 60.0,
       +[] { return tfo::suite_convergence(0); }},
  };

  int failures = 0;
  for (const Entry& entry : entries) {
    const auto t0 = Clock::now();
    tfo::SpectralReport rep;
    std::string error;
    try {
      rep = entry.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();

    const bool in_budget = dt <= entry.budget_seconds;
    const bool ok = error.empty() && rep.all_pass() && in_budget;
    std::printf("[%s] %-36s %6.2fs of %5.1fs\n", ok ? "PASS" : "FAIL",
                entry.label, dt, entry.budget_seconds);
    if (!error.empty()) std::printf("       threw: %s\n", error.c_str());
    if (!in_budget) std::printf("       over time budget\n");
    for (const tfo::Claim& c : rep.claims) {
      if (verbose || !c.pass) {
        std::printf("       %s %-40s value %.6e  tol %.6e\n",
                    c.pass ? "ok  " : "BAD ", c.id.c_str(), c.value, c.tol);
      }
    }
    if (!ok) ++failures;
  }

  std::printf("%zu of %zu suites passed\n", entries.size() - failures,
              entries.size());
  return failures == 0 ? 0 : 1;
}
