// Command-line driver for the verification campaigns.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "landau/campaigns.hpp"
#include "landau/errors.hpp"

namespace {

using namespace landau;

Point parse_pair(const std::string& text, const std::string& flag) {
  std::istringstream in(text);
  double a = 0.0;
  double b = 0.0;
  char comma = 0;
  if (!(in >> a >> comma >> b) || comma != ',' || !(in >> std::ws).eof())
    throw CLI::ValidationError(flag, "expected two comma-separated numbers, got '" + text + "'");
  return {a, b};
}

std::pair<int, int> parse_state(const std::string& text) {
  const Point v = parse_pair(text, "--state");
  if (v.x() < 0 || v.y() < 0 || v.x() != std::floor(v.x()) || v.y() != std::floor(v.y()))
    throw CLI::ValidationError("--state", "expected n+,n- with nonnegative integers");
  return {static_cast<int>(v.x()), static_cast<int>(v.y())};
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

void print_report(const VerificationReport& r) {
  for (const auto& c : r.checks())
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << "  deviation=" << fmt(c.deviation)
              << "  tolerance=" << fmt(c.tolerance) << '\n';
  std::cout << r.campaign() << ": " << (r.pass() ? "PASS" : "FAIL") << " ("
            << r.checks().size() << " checks)\n";
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  return os;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau problem verification campaigns"};
  app.require_subcommand(1);

  double mass = 1.0, charge = 1.0, bfield = 1.0, hbar = 1.0, alpha = 0.0;
  std::string phi_text = "0", x0_text = "0,0", scheme_text = "gh";
  int nmax = 16, margin = 3, grid = 80;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::string json_out, csv_out, dump_grid, state_text = "1,0";
  bool no_timestamp = false;

  app.add_option("--mass", mass, "particle mass m")->capture_default_str();
  app.add_option("--charge", charge, "charge q")->capture_default_str();
  app.add_option("--bfield", bfield, "field strength B")->capture_default_str();
  app.add_option("--hbar", hbar, "reduced Planck constant")->capture_default_str();
  auto* alpha_opt = app.add_option("--alpha", alpha, "gauge parameter alpha")->capture_default_str();
  auto* phi_opt = app.add_option("--phi", phi_text, "gauge polynomial in u1, u2")->capture_default_str();
  app.add_option("--x0", x0_text, "gauge origin a,b")->capture_default_str();
  app.add_option("--nmax", nmax, "Fock truncation per sector")->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("--margin", margin, "interior margin")->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("--grid", grid, "quadrature nodes per axis")->capture_default_str()->check(CLI::Range(3, 4001));
  app.add_option("--scheme", scheme_text, "quadrature scheme")->capture_default_str()->check(CLI::IsMember({"gh", "simpson"}));
  app.add_option("--tol", tol, "override every tolerance");
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--json-out", json_out, "write the JSON report here");
  app.add_option("--csv-out", csv_out, "write campaign CSV output here");
  app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp from the JSON report");

  auto* verify = app.add_subcommand("verify-algebra", "commutator suite on the truncated Fock space");
  auto* scan = app.add_subcommand("gauge-scan", "matrix elements across gauges");
  auto* tables = app.add_subcommand("reproduce-tables", "matrix element tables by several routes");
  auto* classical = app.add_subcommand("classical-sim", "classical orbit integration and charge drift");
  auto* basis = app.add_subcommand("basis-change", "Laguerre to T1-basis change of basis");
  auto* demo = app.add_subcommand("heisenberg-demo", "flat-connection representations");

  ClassicalOptions copt;
  std::string xc_text = "0,0", method_text = "boris";
  classical->add_option("--energy", copt.orbit.E, "orbit energy")->capture_default_str()->check(CLI::NonNegativeNumber);
  classical->add_option("--xc", xc_text, "orbit centre a,b")->capture_default_str();
  classical->add_option("--periods", copt.periods, "cyclotron periods")->capture_default_str()->check(CLI::PositiveNumber);
  classical->add_option("--steps-per-period", copt.steps_per_period, "steps per period")->capture_default_str()->check(CLI::PositiveNumber);
  classical->add_option("--method", method_text, "integrator")->capture_default_str()->check(CLI::IsMember({"boris", "rk4"}));
  for (auto* sub : {scan, basis}) {
    sub->add_option("--dump-grid", dump_grid, "write x1,x2,re,im samples of --state here");
    sub->add_option("--state", state_text, "Fock state n+,n- for --dump-grid")->capture_default_str();
  }
  for (auto* sub : {verify, scan, tables, classical, basis, demo}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    CampaignConfig cfg;
    cfg.params = {mass, charge, bfield, hbar};
    cfg.params.validate();
    cfg.gauge.alpha = alpha;
    cfg.gauge.x0 = parse_pair(x0_text, "--x0");
    cfg.gauge.phi = parse_poly(phi_text);
    cfg.gauge_given = alpha_opt->count() > 0 || phi_opt->count() > 0;
    cfg.settings = {nmax, margin, grid, scheme_from_name(scheme_text), seed};
    if (tol) cfg.tol = Tolerances::uniform(*tol);

    VerificationReport report;
    if (*verify) {
      report = run_verify_algebra(cfg);
    } else if (*scan) {
      auto gauges = default_scan_gauges(cfg.gauge.x0, seed);
      if (cfg.gauge_given) gauges.push_back(cfg.gauge);
      report = run_gauge_scan(cfg, gauges);
    } else if (*tables) {
      TablesResult r = run_reproduce_tables(cfg);
      if (!csv_out.empty()) {
        auto os = open_out(csv_out);
        write_table_csv(os, r.rows);
      }
      report = std::move(r.report);
    } else if (*classical) {
      copt.orbit.xc = parse_pair(xc_text, "--xc");
      copt.method = method_text == "rk4" ? Integrator::rk4 : Integrator::boris;
      ClassicalResult r = run_classical_sim(cfg, copt);
      if (!csv_out.empty()) {
        auto os = open_out(csv_out);
        write_trajectory_csv(os, r);
      }
      report = std::move(r.report);
    } else if (*basis) {
      report = run_basis_change(cfg);
    } else {
      report = run_heisenberg_demo(cfg);
    }

    if (!dump_grid.empty()) {
      const auto [np, nm] = parse_state(state_text);
      auto os = open_out(dump_grid);
      write_grid_csv(os, psi_fock(cfg.gauge, cfg.params, np, nm),
                     default_grid(cfg.params, cfg.gauge.x0, grid, cfg.settings.scheme));
    }

    print_report(report);
    if (!json_out.empty()) {
      auto os = open_out(json_out);
      const auto stamp = no_timestamp ? std::nullopt : std::optional<std::string>(utc_timestamp());
      os << report.to_json(stamp).dump(2) << '\n';
    }
    return report.pass() ? 0 : 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
