#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace tfo {

enum class DomainKind { FullLine, Interval, Semiaxis };

struct DomainSpec {
  DomainKind kind = DomainKind::Interval;
  double a = 1.0;       // half-width, Interval only
  double cutoff = 0.0;  // truncation radius for FullLine/Semiaxis; 0 asks for the default

  static DomainSpec interval(double half_width);
  static DomainSpec full_line(double cutoff = 0.0);
  static DomainSpec semiaxis(double cutoff = 0.0);
};

// Default truncation radius for unbounded domains. The full-line value grows
// with n so that the Gaussian-type test functions used throughout are below
// 1e-15 at the edge; the semiaxis default is generous for exponential decay.
double default_cutoff(DomainKind kind, int n);

struct QuadratureGrid {
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // all positive
  bool symmetric = false;
  DomainSpec domain;

  int size() const { return static_cast<int>(nodes.size()); }
  int rev(int i) const { return size() - 1 - i; }
};

struct SampledFunction {
  std::vector<std::complex<double>> values;
  const QuadratureGrid* grid = nullptr;  // non-owning; the grid outlives the samples
};

// Gauss-Legendre based grids. Interval and FullLine grids are assembled by
// mirroring one half so that node[i] == -node[n-1-i] and the paired weights
// are bit-identical; the parity identities downstream rely on that, not on
// the rule merely being close to symmetric. Semiaxis uses the grading map
// xi = cutoff * u^2 on (0,1) Gauss nodes to cluster points near the
// degenerate end of the coefficient xi^2.
QuadratureGrid build_grid(const DomainSpec& domain, int n);

// L2 inner product of two sampled functions, conjugate-linear in f. Values
// are expected in weighted coordinates, so this is the Euclidean dot.
std::complex<double> inner_product(const SampledFunction& f, const SampledFunction& g);

// Splits f into even and odd parts with respect to the grid's reflection:
// f_e[i] = (f[i] + f[rev(i)])/2, f_o[i] = (f[i] - f[rev(i)])/2.
std::pair<SampledFunction, SampledFunction> project_even_odd(const SampledFunction& f);

// Samples a callable into weighted coordinates: v[k] = sqrt(w[k]) * fn(node[k]).
template <typename Fn>
std::vector<std::complex<double>> weighted_samples(const QuadratureGrid& g, Fn&& fn) {
  std::vector<std::complex<double>> v(g.nodes.size());
  for (size_t k = 0; k < v.size(); ++k)
    v[k] = std::sqrt(g.weights[k]) * std::complex<double>(fn(g.nodes[k]));
  return v;
}

}  // namespace tfo
