#pragma once

#include <functional>

#include "tfo/matrix.hpp"

namespace tfo {

using Integrand = std::function<cplx(double)>;

// Adaptive Gauss7/Kronrod15 on a finite interval. The Kronrod value is kept,
// |K15 - G7| drives bisection. abs_tol is an absolute target for the whole
// interval.
cplx integrate(const Integrand& f, double lo, double hi, double abs_tol = 1e-12);

// Integral over [0, inf) for decaying integrands: panels [0,1],[1,2],[2,4],...
// of doubling width, each integrated adaptively; stops once a panel
// contributes below 1e-16 in magnitude (tail truncation).
cplx integrate_semiaxis(const Integrand& f, double abs_tol = 1e-12);

// Integral over (-inf, inf), same doubling-panel scheme on both sides.
cplx integrate_real_line(const Integrand& f, double abs_tol = 1e-12);

struct LimitEstimate {
  cplx value;         // extrapolated limit
  cplx last_raw;      // rawest (smallest-eps) sample, handy for diagnostics
  double error_hint;  // |change| in the final extrapolation step
};

// Limit of g(eps) as eps -> 0+ sampled on the geometric sequence
// eps_k = eps0 * ratio^k, k = 0..terms-1, accelerated by Richardson
// elimination of successive powers of eps. Divergent inputs simply produce a
// huge extrapolated value, which is what the boundary-condition checks want
// to see for violating functions.
LimitEstimate limit_at_zero(const std::function<cplx(double)>& g, double eps0,
                            int terms = 12, double ratio = 0.5);

// Limit of g(s) as s -> +inf on s_k = s0 * 2^k, via the substitution u = 1/s.
LimitEstimate limit_at_infinity(const std::function<cplx(double)>& g, double s0,
                                int terms = 12);

}  // namespace tfo
