#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>

#include "landau/polynomial.hpp"

namespace landau {

using Point = Eigen::Vector2d;

/// Mass, charge, field and action quantum of the planar charged particle.
struct PhysicalParams {
  double m = 1.0;
  double q = 1.0;
  double B = 1.0;
  double hbar = 1.0;

  /// Throws std::invalid_argument unless m > 0, q != 0, B != 0, hbar > 0.
  void validate() const;

  double qB() const { return q * B; }
  /// Cyclotron frequency |qB|/m.
  double omega_c() const;
  /// sign(qB), +1 or -1.
  int s() const { return qB() > 0.0 ? 1 : -1; }
  /// Magnetic length sqrt(hbar / (m omega_c)).
  double lambda() const;
};

struct DerivedParams {
  double omega_c;
  int s;
  double lambda;
};

DerivedParams derived_params(const PhysicalParams& p);

/// Gauge fixing data for A_i = -B/2 eps_ij u_j + d_i phibar with
/// phibar = -(alpha B / 2) u1 u2 + phi and u = x - x0.
struct GaugeChoice {
  double alpha = 0.0;
  Point x0 = Point::Zero();
  Poly2 phi;

  /// phibar as an exact polynomial in u.
  Poly2 total_gauge_function(double B) const;
};

GaugeChoice symmetric_gauge(const Point& x0 = Point::Zero());
GaugeChoice landau_gauge(int axis, const Point& x0 = Point::Zero());

/// Parse the polynomial grammar in u1, u2. Throws ParseError or DegreeOverflow.
Poly2 parse_poly(std::string_view text, int max_degree = kDefaultMaxDegree);
/// Canonical text form; parse_poly(to_string(p)) == p.
std::string to_string(const Poly2& p);

/// Exact polynomial components (A1, A2) in shifted coordinates.
std::array<Poly2, 2> vector_potential_poly(const GaugeChoice& g, double B);
Eigen::Vector2d vector_potential(const GaugeChoice& g, const PhysicalParams& p,
                                 const Point& x);

/// Gauge function taking A[g_from] to A[g_to]. Throws OriginMismatch.
Poly2 gauge_delta(const GaugeChoice& g_from, const GaugeChoice& g_to, double B);

/// Evaluate a Poly2 at plane point x given origin x0.
inline double eval_at(const Poly2& f, const Point& x0, const Point& x) {
  return f(std::array<double, 2>{x.x() - x0.x(), x.y() - x0.y()});
}

}  // namespace landau
