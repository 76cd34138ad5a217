#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "landau/classical.hpp"
#include "landau/report.hpp"

namespace landau {

struct Tolerances {
  double algebraic = 1e-12;
  double quadrature = 1e-8;
  double classical = 1e-8;
  double connection = 1e-10;
  double reconstruction = 1e-7;

  /// Every tolerance set to tol (the --tol override).
  static Tolerances uniform(double tol);
};

struct CampaignConfig {
  PhysicalParams params;
  /// Gauge for position-space work; also appended to the gauge-scan list when
  /// gauge_given is set.
  GaugeChoice gauge;
  bool gauge_given = false;
  RunSettings settings;
  Tolerances tol;
};

/// Uniform double in [lo, hi) from the top 53 bits of one draw.
double uniform(std::mt19937_64& rng, double lo, double hi);

/// Random gauge function with linear and quadratic coefficients in [-0.5, 0.5]
/// and, for degree 3, cubic coefficients in [-0.1, 0.1]; rounded to 1e-3.
Poly2 random_phi(int degree, std::mt19937_64& rng);

/// alpha in {-1, 0, 0.37, 1, 2} with phi = 0, then a seeded quadratic phi
/// (alpha = 0) and a seeded cubic phi (alpha = 0.37), all about x0.
std::vector<GaugeChoice> default_scan_gauges(const Point& x0, std::uint64_t seed);

VerificationReport run_verify_algebra(const CampaignConfig& cfg);

/// Throws OriginMismatch unless all gauges share x0.
VerificationReport run_gauge_scan(const CampaignConfig& cfg, const std::vector<GaugeChoice>& gauges);

struct TableRow {
  std::string basis;
  std::string op;
  std::string indices;
  cdouble closed_form;
  cdouble computed;
};

struct TablesResult {
  VerificationReport report;
  std::vector<TableRow> rows;
};

TablesResult run_reproduce_tables(const CampaignConfig& cfg);

struct ClassicalOptions {
  TrajectoryParams orbit{0.5, Point::Zero(), 0.0};
  double periods = 10.0;
  int steps_per_period = 1000;
  Integrator method = Integrator::boris;
};

struct ClassicalResult {
  VerificationReport report;
  std::vector<double> times;
  std::vector<PhaseSpacePoint> states;
  std::vector<NoetherCharges> charges;
};

ClassicalResult run_classical_sim(const CampaignConfig& cfg, const ClassicalOptions& opt);

VerificationReport run_basis_change(const CampaignConfig& cfg);

/// Flat-connection conjugation demo: V = 0 against V = grad Lambda with phase-shifted states.
VerificationReport run_heisenberg_demo(const CampaignConfig& cfg);

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows);
void write_trajectory_csv(std::ostream& os, const ClassicalResult& r);
/// x1, x2, re, im of psi on the grid nodes.
void write_grid_csv(std::ostream& os, const WaveForm& psi, const Grid2& grid);

}  // namespace landau
