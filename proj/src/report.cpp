#include "tfo/report.hpp"

#include <charconv>
#include <stdexcept>

#include "json.hpp"

namespace tfo {

bool SpectralReport::all_pass() const {
  for (const Claim& c : claims)
    if (!c.pass) return false;
  return true;
}

void SpectralReport::add(std::string id, std::string anchor, double value,
                         double tol) {
  add_checked(std::move(id), std::move(anchor), value, tol, value <= tol);
}

void SpectralReport::add_checked(std::string id, std::string anchor,
                                 double value, double tol, bool pass) {
  claims.push_back(Claim{std::move(id), std::move(anchor), value, tol, pass});
}

GridMeta grid_meta(const QuadratureGrid& grid) {
  GridMeta m = grid_meta(grid.domain);
  m.n = grid.size();
  return m;
}

GridMeta grid_meta(const DomainSpec& domain) {
  GridMeta m;
  switch (domain.kind) {
    case DomainKind::FullLine: m.kind = "full_line"; break;
    case DomainKind::Interval: m.kind = "interval"; break;
    case DomainKind::Semiaxis: m.kind = "semiaxis"; break;
  }
  m.a = domain.a;
  m.cutoff = domain.cutoff;
  m.n = 0;
  return m;
}

std::string format_double(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (res.ec != std::errc{})
    throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

std::string report_to_json(const SpectralReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["grid"] = {{"kind", report.grid.kind},
               {"a", report.grid.a},
               {"cutoff", report.grid.cutoff},
               {"n", report.grid.n}};
  j["seed"] = report.seed;
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  for (const Claim& c : report.claims) {
    claims.push_back({{"id", c.id},
                      {"anchor", c.anchor},
                      {"value", c.value},
                      {"tol", c.tol},
                      {"pass", c.pass}});
  }
  j["claims"] = std::move(claims);
  return j.dump(2) + "\n";
}

namespace {
std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}
}  // namespace

std::string report_to_csv(const SpectralReport& report) {
  std::string out = "id,anchor,value,tol,pass\r\n";
  for (const Claim& c : report.claims) {
    out += csv_quote(c.id) + ',' + csv_quote(c.anchor) + ',' +
           format_double(c.value) + ',' + format_double(c.tol) + ',' +
           (c.pass ? "true" : "false") + "\r\n";
  }
  return out;
}

}  // namespace tfo
