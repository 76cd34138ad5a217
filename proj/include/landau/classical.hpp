#pragma once

#include <vector>

#include "landau/params.hpp"
#include "landau/polynomial.hpp"

namespace landau {

/// Position and velocity momentum p = m dx/dt.
struct PhaseSpacePoint {
  Point x = Point::Zero();
  Eigen::Vector2d p = Eigen::Vector2d::Zero();
};

/// Energy, magnetic centre and phase time of a circular orbit.
struct TrajectoryParams {
  double E = 0.0;
  Point xc = Point::Zero();
  double t0 = 0.0;
};

struct NoetherCharges {
  double E;
  double T1;
  double T2;
  double M3;
};

enum class Integrator { rk4, boris };

PhaseSpacePoint analytic_trajectory(const PhysicalParams& p, const TrajectoryParams& tp,
                                    double t);

/// Returns n + 1 states: s0 followed by n steps of size dt.
///
/// The boris method is a synchronised Cayley rotation of p with the
/// frequency-corrected angle tan(omega_c dt / 2), plus the matching chord for x.
/// For a uniform field it reproduces the exact flow up to round-off and keeps |p|
/// fixed. Throws std::invalid_argument unless dt > 0 and n >= 1.
std::vector<PhaseSpacePoint> integrate(const PhysicalParams& p, const PhaseSpacePoint& s0,
                                       double dt, int n, Integrator method);

NoetherCharges noether_charges(const PhysicalParams& p, const Point& x0,
                               const PhaseSpacePoint& s);

Point magnetic_centre(const PhysicalParams& p, const Point& x0, const Eigen::Vector2d& T);

Eigen::Vector2d canonical_momenta(const GaugeChoice& g, const PhysicalParams& p,
                                  const PhaseSpacePoint& s);

// ---------------------------------------------------------------------------
// Polynomial phase-space observables over (u1, u2, p1, p2), u = x - x0.

inline constexpr int kObservableMaxDegree = 12;

using PolyObservable = Polynomial<double, 4>;

namespace obs {

enum Var : int { u1 = 0, u2 = 1, p1 = 2, p2 = 3 };

PolyObservable coordinate(int i);  // u_i
PolyObservable momentum(int i);    // p_i
PolyObservable energy(const PhysicalParams& p);
PolyObservable translation(int i, const PhysicalParams& p);  // T_i
PolyObservable rotation(const PhysicalParams& p);             // M3
PolyObservable orbital_angular_momentum();                    // L3 = eps_ij u_i p_j
/// x_ci - x0_i = eps_ij T_j / (qB)
PolyObservable magnetic_centre_offset(int i, const PhysicalParams& p);
/// Lift a Poly2 in u to a phase-space observable.
PolyObservable lift(const Poly2& f);

}  // namespace obs

/// Magnetic Poisson bracket in gauge-invariant coordinates:
/// {f,g} = sum_i (df/du_i dg/dp_i - df/dp_i dg/du_i) + qB eps_ij df/dp_i dg/dp_j.
PolyObservable poisson_bracket(const PolyObservable& f, const PolyObservable& g,
                               const PhysicalParams& p);

/// Canonical bracket for observables over (u1, u2, pi1, pi2).
PolyObservable canonical_bracket(const PolyObservable& f, const PolyObservable& g);

/// Rewrite f(u, p) as a function of (u, pi) using p = pi - q A(u).
PolyObservable to_canonical(const PolyObservable& f, const GaugeChoice& g,
                            const PhysicalParams& p);

/// Evaluate an observable at a phase-space point.
double evaluate(const PolyObservable& f, const Point& x0, const PhaseSpacePoint& s);

}  // namespace landau
