#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tfo/grid.hpp"

namespace tfo {

// One checked statement. `pass` is decided by the suite that produced the
// claim (usually value <= tol, but count-style claims differ), so readers
// should trust the boolean, not re-derive it.
struct Claim {
  std::string id;
  std::string anchor;  // short mathematical statement being checked
  double value = 0.0;  // measured quantity
  double tol = 0.0;
  bool pass = false;
};

struct GridMeta {
  std::string kind;  // "full_line" | "interval" | "semiaxis" | "none"
  double a = 0.0;
  double cutoff = 0.0;
  int n = 0;
};

struct SpectralReport {
  std::string suite;
  GridMeta grid;
  std::uint64_t seed = 0;
  std::vector<Claim> claims;

  bool all_pass() const;
  void add(std::string id, std::string anchor, double value, double tol);
  void add_checked(std::string id, std::string anchor, double value, double tol,
                   bool pass);
};

GridMeta grid_meta(const QuadratureGrid& grid);
GridMeta grid_meta(const DomainSpec& domain);

// Serializations used by the command-line front end. Both are byte-stable
// for identical inputs: JSON via a fixed field order, CSV via shortest
// round-trip formatting with '.' decimal and no locale dependence.
std::string report_to_json(const SpectralReport& report);
std::string report_to_csv(const SpectralReport& report);

// 17-significant-digit decimal form of a double (round-trip exact).
std::string format_double(double v);

}  // namespace tfo
