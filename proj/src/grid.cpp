#include "tfo/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tfo {

DomainSpec DomainSpec::interval(double half_width) {
  DomainSpec d;
  d.kind = DomainKind::Interval;
  d.a = half_width;
  return d;
}

DomainSpec DomainSpec::full_line(double cutoff) {
  DomainSpec d;
  d.kind = DomainKind::FullLine;
  d.cutoff = cutoff;
  return d;
}

DomainSpec DomainSpec::semiaxis(double cutoff) {
  DomainSpec d;
  d.kind = DomainKind::Semiaxis;
  d.cutoff = cutoff;
  return d;
}

double default_cutoff(DomainKind kind, int n) {
  if (kind == DomainKind::FullLine) return 8.0 + std::sqrt(2.0 * n);
  if (kind == DomainKind::Semiaxis) return 40.0;
  return 0.0;
}

namespace {

// Gauss-Legendre nodes in (0,1] half of (-1,1) plus their weights, by Newton
// iteration on the recurrence. Only the positive half is computed; callers
// mirror it, which is what makes the symmetric grids exactly symmetric.
void gauss_legendre_half(int n, std::vector<double>& x, std::vector<double>& w) {
  const int half = n / 2;
  x.assign(half, 0.0);
  w.assign(half, 0.0);
  for (int i = 0; i < half; ++i) {
    // Count roots from the largest; standard Chebyshev-angle initial guess.
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = t;
      for (int k = 1; k < n; ++k) {
        double p2 = ((2.0 * k + 1.0) * t * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (t * p1 - p0) / (t * t - 1.0);
      double step = p1 / dp;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    double p0 = 1.0, p1 = t;
    for (int k = 1; k < n; ++k) {
      double p2 = ((2.0 * k + 1.0) * t * p1 - k * p0) / (k + 1.0);
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (t * p1 - p0) / (t * t - 1.0);
    x[half - 1 - i] = t;  // ascending within the half
    w[half - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

// Full rule on (-1,1) for odd-cardinality uses (semiaxis path); nodes ascending.
void gauss_legendre_full(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = t;
      for (int k = 1; k < n; ++k) {
        double p2 = ((2.0 * k + 1.0) * t * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (t * p1 - p0) / (t * t - 1.0);
      double step = p1 / dp;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    double p0 = 1.0, p1 = t;
    for (int k = 1; k < n; ++k) {
      double p2 = ((2.0 * k + 1.0) * t * p1 - k * p0) / (k + 1.0);
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (t * p1 - p0) / (t * t - 1.0);
    x[n - 1 - i] = t;
    w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

QuadratureGrid mirrored_grid(double half_width, int n) {
  std::vector<double> xh, wh;
  gauss_legendre_half(n, xh, wh);
  QuadratureGrid g;
  g.nodes.resize(n);
  g.weights.resize(n);
  const int half = n / 2;
  for (int i = 0; i < half; ++i) {
    double node = half_width * xh[i];
    double weight = half_width * wh[i];
    g.nodes[half + i] = node;
    g.weights[half + i] = weight;
    g.nodes[half - 1 - i] = -node;  // bit-exact mirror
    g.weights[half - 1 - i] = weight;
  }
  g.symmetric = true;
  return g;
}

}  // namespace

QuadratureGrid build_grid(const DomainSpec& domain, int n) {
  if (n < 4) throw std::invalid_argument("build_grid: need at least 4 nodes");
  if (!std::isfinite(domain.a) || !std::isfinite(domain.cutoff))
    throw std::invalid_argument("build_grid: non-finite domain parameters");

  QuadratureGrid g;
  switch (domain.kind) {
    case DomainKind::Interval: {
      if (domain.a <= 0.0) throw std::invalid_argument("build_grid: interval half-width must be positive");
      if (n % 2 != 0) throw std::invalid_argument("build_grid: symmetric grids need even n");
      g = mirrored_grid(domain.a, n);
      break;
    }
    case DomainKind::FullLine: {
      if (n % 2 != 0) throw std::invalid_argument("build_grid: symmetric grids need even n");
      double cut = domain.cutoff > 0.0 ? domain.cutoff : default_cutoff(domain.kind, n);
      g = mirrored_grid(cut, n);
      break;
    }
    case DomainKind::Semiaxis: {
      double cut = domain.cutoff > 0.0 ? domain.cutoff : default_cutoff(domain.kind, n);
      std::vector<double> x, w;
      gauss_legendre_full(n, x, w);
      g.nodes.resize(n);
      g.weights.resize(n);
      for (int i = 0; i < n; ++i) {
        double u = 0.5 * (x[i] + 1.0);   // (0,1)
        double wu = 0.5 * w[i];
        g.nodes[i] = cut * u * u;        // grading map, clusters near 0
        g.weights[i] = wu * cut * 2.0 * u;
      }
      g.symmetric = false;
      break;
    }
  }
  g.domain = domain;
  if (g.domain.cutoff == 0.0 && domain.kind != DomainKind::Interval)
    g.domain.cutoff = default_cutoff(domain.kind, n);
  return g;
}

std::complex<double> inner_product(const SampledFunction& f, const SampledFunction& g) {
  if (f.grid == nullptr || f.grid != g.grid)
    throw std::invalid_argument("inner_product: samples must share one grid");
  // Samples are stored in weighted coordinates (sqrt(w) folded in), so the
  // L2 pairing is the plain conjugated dot; multiplying by the weights here
  // would count them twice.
  std::complex<double> acc = 0.0;
  for (size_t k = 0; k < f.values.size(); ++k)
    acc += std::conj(f.values[k]) * g.values[k];
  return acc;
}

std::pair<SampledFunction, SampledFunction> project_even_odd(const SampledFunction& f) {
  const QuadratureGrid* g = f.grid;
  if (g == nullptr || !g->symmetric)
    throw std::invalid_argument("project_even_odd: needs a symmetric grid");
  const int n = g->size();
  SampledFunction fe, fo;
  fe.grid = fo.grid = g;
  fe.values.resize(n);
  fo.values.resize(n);
  for (int i = 0; i < n; ++i) {
    auto v = f.values[i];
    auto vr = f.values[g->rev(i)];
    fe.values[i] = 0.5 * (v + vr);
    fo.values[i] = 0.5 * (v - vr);
  }
  return {fe, fo};
}

}  // namespace tfo
