// Command-line front end: PSWF tables, Gram spectra, commutator reports, and
// the verification suites, as CSV or JSON on stdout or into a file.
//
// Exit status: 0 when every asserted claim passes (tables always 0 on
// success), 1 when a verification claim fails, 2 on usage or precondition
// errors (bad flags, invalid parameters, unwritable output).

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tfo/diff_ops.hpp"
#include "tfo/eigen.hpp"
#include "tfo/fourier.hpp"
#include "tfo/grid.hpp"
#include "tfo/report.hpp"
#include "tfo/spectral.hpp"
#include "tfo/suites.hpp"

namespace {

using nlohmann::ordered_json;

ordered_json grid_json(const tfo::GridMeta& g) {
  return {{"kind", g.kind}, {"a", g.a}, {"cutoff", g.cutoff}, {"n", g.n}};
}

std::string pswf_table(const tfo::PswfSet& set, const std::string& format) {
  if (format == "csv") {
    std::string out = "n,chi_n,mu_n,re_lambda,im_lambda,parity,defect\r\n";
    for (const tfo::PswfMode& m : set.modes) {
      out += std::to_string(m.index) + ',' + tfo::format_double(m.chi) + ',' +
             tfo::format_double(m.mu) + ',' +
             tfo::format_double(m.lambda.real()) + ',' +
             tfo::format_double(m.lambda.imag()) + ',' +
             (m.parity == tfo::Parity::Even ? "even" : "odd") + ',' +
             tfo::format_double(m.defect) + "\r\n";
    }
    return out;
  }
  ordered_json j;
  j["table"] = "pswf";
  j["grid"] = grid_json(tfo::grid_meta(*set.grid));
  ordered_json rows = ordered_json::array();
  for (const tfo::PswfMode& m : set.modes) {
    rows.push_back({{"n", m.index},
                    {"chi_n", m.chi},
                    {"mu_n", m.mu},
                    {"re_lambda", m.lambda.real()},
                    {"im_lambda", m.lambda.imag()},
                    {"parity", m.parity == tfo::Parity::Even ? "even" : "odd"},
                    {"defect", m.defect}});
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string spectrum_table(const tfo::QuadratureGrid& grid,
                           const std::string& format) {
  const tfo::OperatorMatrix G =
      tfo::build_gram(tfo::build_truncated_fourier(grid));
  const tfo::EigenDecomposition dec = tfo::eig_sym_dense(G);
  const size_t n = dec.eigenvalues.size();

  if (format == "csv") {
    std::string out = "k,mu\r\n";
    for (size_t k = 0; k < n; ++k)
      out += std::to_string(k) + ',' +
             tfo::format_double(dec.eigenvalues[n - 1 - k]) + "\r\n";
    return out;
  }
  ordered_json j;
  j["table"] = "gram_spectrum";
  j["grid"] = grid_json(tfo::grid_meta(grid));
  ordered_json rows = ordered_json::array();
  for (size_t k = 0; k < n; ++k)
    rows.push_back({{"k", k}, {"mu", dec.eigenvalues[n - 1 - k]}});
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

// Writes text to the output path (stdout when empty). Returns 0 or 2.
int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return 0;
  }
  std::ofstream ofs(out_path, std::ios::binary);
  if (!ofs) {
    std::cerr << "error: cannot open output path: " << out_path << "\n";
    return 2;
  }
  ofs.write(text.data(), static_cast<std::streamsize>(text.size()));
  ofs.close();
  if (ofs.fail()) {
    std::cerr << "error: short write to: " << out_path << "\n";
    return 2;
  }
  return 0;
}

int emit_reports(const std::vector<tfo::SpectralReport>& reports,
                 const std::string& format, const std::string& out_path) {
  std::string text;
  if (reports.size() == 1) {
    text = (format == "csv") ? tfo::report_to_csv(reports[0])
                             : tfo::report_to_json(reports[0]);
  } else if (format == "csv") {
    // Single flat table: claim ids gain a suite prefix.
    tfo::SpectralReport combined;
    combined.suite = "all";
    for (const tfo::SpectralReport& rep : reports)
      for (const tfo::Claim& c : rep.claims) {
        tfo::Claim tagged = c;
        tagged.id = rep.suite + "." + c.id;
        combined.claims.push_back(std::move(tagged));
      }
    text = tfo::report_to_csv(combined);
  } else {
    ordered_json arr = ordered_json::array();
    for (const tfo::SpectralReport& rep : reports)
      arr.push_back(ordered_json::parse(tfo::report_to_json(rep)));
    text = arr.dump(2) + "\n";
  }

  const int rc = emit(text, out_path);
  if (rc != 0) return rc;
  for (const tfo::SpectralReport& rep : reports)
    if (!rep.all_pass()) return 1;
  return 0;
}

// The environment fallback for --seed. Returns false on a malformed value.
bool seed_from_env(std::uint64_t& seed) {
  const char* env = std::getenv("TFO_SEED");
  if (env == nullptr) return true;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || end == env || *end != '\0') return false;
  seed = v;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  if (!seed_from_env(seed)) {
    std::cerr << "error: TFO_SEED is not an unsigned integer\n";
    return 2;
  }

  double a = 1.0;
  double cutoff = 0.0;
  int n = 64;
  int modes = 8;
  std::string format = "json";
  std::string out_path;
  std::string which;
  std::vector<int> sizes = {24, 48, 96};

  CLI::App app{
      "Discretized truncated Fourier operator toolkit: PSWF tables, Gram "
      "spectra, commutator measurements, and verification suites."};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* cmd, bool with_seed) {
    cmd->add_option("--format", format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out_path, "Output file (default: stdout)");
    if (with_seed)
      cmd->add_option("--seed", seed,
                      "Seed for random test vectors (overrides TFO_SEED)");
  };
  const auto add_grid = [&](CLI::App* cmd) {
    cmd->add_option("--a", a, "Interval half-width")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--n", n, "Grid size")->check(CLI::Range(4, 4096));
  };

  CLI::App* pswf_cmd = app.add_subcommand(
      "pswf", "Prolate mode table: chi, mu, lambda, parity, defect");
  add_grid(pswf_cmd);
  pswf_cmd->add_option("--modes", modes, "Number of modes (at most n/4)")
      ->check(CLI::Range(1, 1024));
  add_common(pswf_cmd, false);

  CLI::App* spectrum_cmd = app.add_subcommand(
      "spectrum", "Gram eigenvalues on an interval grid, largest first");
  add_grid(spectrum_cmd);
  add_common(spectrum_cmd, false);

  CLI::App* comm_cmd = app.add_subcommand(
      "commutator", "Commutator residual report for one operator pair");
  comm_cmd
      ->add_option("--case", which,
                   "Pair: hermite, prolate, fd-natural, fd-dirichlet")
      ->required()
      ->check(CLI::IsMember(
          {"hermite", "prolate", "fd-natural", "fd-dirichlet"}));
  add_grid(comm_cmd);
  comm_cmd->add_option("--cutoff", cutoff,
                       "Full-line truncation radius (0 = default)")
      ->check(CLI::NonNegativeNumber);
  add_common(comm_cmd, true);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run a verification suite");
  verify_cmd
      ->add_option(
          "--case", which,
          "Suite: parity, reduction, gram, cross, two-route, pairs, "
          "function, boundary, hermite-eigen, convergence, prolate, all")
      ->required()
      ->check(CLI::IsMember({"parity", "reduction", "gram", "cross",
                             "two-route", "pairs", "function", "boundary",
                             "hermite-eigen", "convergence", "prolate",
                             "all"}));
  add_grid(verify_cmd);
  add_common(verify_cmd, true);

  CLI::App* conv_cmd = app.add_subcommand(
      "converge", "Grid-refinement study for one commuting pair");
  conv_cmd->add_option("--case", which, "Study: hermite, prolate, constant")
      ->required()
      ->check(CLI::IsMember({"hermite", "prolate", "constant"}));
  conv_cmd->add_option("--a", a, "Interval half-width")
      ->check(CLI::PositiveNumber);
  conv_cmd
      ->add_option("--sizes", sizes,
                   "Comma-separated increasing grid sizes (at least 3)")
      ->delimiter(',');
  add_common(conv_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (pswf_cmd->parsed()) {
      return emit(pswf_table(tfo::compute_pswf(a, modes, n), format),
                  out_path);
    }

    if (spectrum_cmd->parsed()) {
      const tfo::QuadratureGrid grid =
          tfo::build_grid(tfo::DomainSpec::interval(a), n);
      return emit(spectrum_table(grid, format), out_path);
    }

    if (comm_cmd->parsed()) {
      tfo::QuadratureGrid grid;
      tfo::OperatorMatrix L;
      tfo::DiffOpSpec spec;
      if (which == "hermite") {
        spec = tfo::DiffOpSpec::hermite();
        grid = tfo::build_grid(
            tfo::DomainSpec::full_line(cutoff > 0.0 ? cutoff : 8.0), n);
        L = tfo::build_hermite_operator(grid);
      } else {
        spec = tfo::DiffOpSpec::prolate(a);
        grid = tfo::build_grid(tfo::DomainSpec::interval(a), n);
        if (which == "prolate")
          L = tfo::prolate_grid_operator(grid);
        else
          L = tfo::fd_prolate_operator(grid, which == "fd-dirichlet");
      }
      const tfo::OperatorMatrix F = tfo::build_truncated_fourier(grid);
      return emit_reports(
          {tfo::verify_commutation_matrix(spec, grid, L, F, seed)}, format,
          out_path);
    }

    if (verify_cmd->parsed()) {
      if (which == "all")
        return emit_reports(tfo::run_all_suites(seed), format, out_path);
      if (which == "prolate") {
        const tfo::QuadratureGrid grid =
            tfo::build_grid(tfo::DomainSpec::interval(a), n);
        const tfo::OperatorMatrix F = tfo::build_truncated_fourier(grid);
        return emit_reports(
            {tfo::verify_commutation_matrix(tfo::DiffOpSpec::prolate(a), grid,
                                            tfo::prolate_grid_operator(grid),
                                            F, seed)},
            format, out_path);
      }
      const std::map<std::string, std::function<tfo::SpectralReport()>>
          fixed = {
              {"parity", [] { return tfo::suite_parity(); }},
              {"reduction", [&] { return tfo::suite_reduction(seed); }},
              {"gram", [] { return tfo::suite_gram_spectrum(); }},
              {"cross", [] { return tfo::suite_cross_and_multiplicity(); }},
              {"two-route", [] { return tfo::suite_two_route(); }},
              {"pairs", [&] { return tfo::suite_commutator(seed); }},
              {"function", [] { return tfo::suite_function_level(); }},
              {"boundary", [] { return tfo::suite_boundary(); }},
              {"hermite-eigen", [] { return tfo::suite_hermite_eigen(); }},
              {"convergence", [&] { return tfo::suite_convergence(seed); }},
          };
      return emit_reports({fixed.at(which)()}, format, out_path);
    }

    if (conv_cmd->parsed()) {
      tfo::SpectralReport rep;
      if (which == "constant")
        rep = tfo::convergence_study_constant(sizes, seed);
      else
        rep = tfo::convergence_study(which == "hermite"
                                         ? tfo::DiffOpSpec::hermite()
                                         : tfo::DiffOpSpec::prolate(a),
                                     sizes, seed);
      return emit_reports({rep}, format, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "Run with --help for usage.\n";
    return 2;
  }
  return 2;  // unreachable with require_subcommand(1)
}
