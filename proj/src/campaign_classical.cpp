#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "landau/campaigns.hpp"

namespace landau {

namespace {

// Largest coefficient magnitude of f - g.
double coefficient_gap(const PolyObservable& f, const PolyObservable& g) {
  const PolyObservable d = f - g;
  double out = 0.0;
  for (const auto& [e, c] : d.terms()) out = std::max(out, std::abs(c));
  return out;
}

// Eighth-order central difference of the analytic trajectory.
PhaseSpacePoint analytic_rate(const PhysicalParams& p, const TrajectoryParams& tp, double t,
                              double h) {
  static constexpr std::array<double, 4> w{4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
  PhaseSpacePoint d;
  for (int k = 1; k <= 4; ++k) {
    const PhaseSpacePoint a = analytic_trajectory(p, tp, t + k * h);
    const PhaseSpacePoint b = analytic_trajectory(p, tp, t - k * h);
    d.x += w[k - 1] * (a.x - b.x) / h;
    d.p += w[k - 1] * (a.p - b.p) / h;
  }
  return d;
}

}  // namespace

ClassicalResult run_classical_sim(const CampaignConfig& cfg, const ClassicalOptions& opt) {
  const PhysicalParams& p = cfg.params;
  p.validate();
  const Point& x0 = cfg.gauge.x0;
  ClassicalResult out{VerificationReport("classical-sim", p, {cfg.gauge}, cfg.settings), {}, {}, {}};
  VerificationReport& rep = out.report;

  const double period = 2.0 * std::numbers::pi / p.omega_c();
  const double dt = period / opt.steps_per_period;
  const int steps = static_cast<int>(std::lround(opt.periods * opt.steps_per_period));
  const PhaseSpacePoint s0 = analytic_trajectory(p, opt.orbit, 0.0);
  out.states = integrate(p, s0, dt, steps, opt.method);
  for (std::size_t i = 0; i < out.states.size(); ++i) {
    out.times.push_back(static_cast<double>(i) * dt);
    out.charges.push_back(noether_charges(p, x0, out.states[i]));
  }

  // Drifts relative to the natural scale of each charge.
  const NoetherCharges c0 = out.charges.front();
  const double E0 = opt.orbit.E;
  const double tref = std::max(std::hypot(c0.T1, c0.T2), std::sqrt(2.0 * p.m * E0));
  const double mref = std::max(std::abs(c0.M3), E0 / p.omega_c());
  auto rel = [](double d, double ref) { return ref > 0.0 ? d / ref : d; };
  double dE = 0.0, dT1 = 0.0, dT2 = 0.0, dM = 0.0, relation = 0.0, endpoint = 0.0;
  const double qB = p.qB();
  for (std::size_t i = 0; i < out.states.size(); ++i) {
    const NoetherCharges& ci = out.charges[i];
    dE = std::max(dE, std::abs(ci.E - c0.E));
    dT1 = std::max(dT1, std::abs(ci.T1 - c0.T1));
    dT2 = std::max(dT2, std::abs(ci.T2 - c0.T2));
    dM = std::max(dM, std::abs(ci.M3 - c0.M3));
    const double r = ci.T1 * ci.T1 + ci.T2 * ci.T2 - 2.0 * p.m * ci.E - 2.0 * qB * ci.M3;
    relation = std::max(relation, std::abs(r));
    const PhaseSpacePoint exact = analytic_trajectory(p, opt.orbit, out.times[i]);
    endpoint = std::max(endpoint, (out.states[i].x - exact.x).norm());
  }
  rep.check("drift.E", rel(dE, E0), cfg.tol.classical);
  rep.check("drift.T1", rel(dT1, tref), cfg.tol.classical);
  rep.check("drift.T2", rel(dT2, tref), cfg.tol.classical);
  rep.check("drift.M3", rel(dM, mref), cfg.tol.classical);
  rep.check("relation.residual", rel(relation, tref * tref), std::min(cfg.tol.classical, 1e-10));
  rep.check("trajectory.position", endpoint / p.lambda(), 1e-6);

  // The closed-form orbit against the Lorentz equations.
  double ode = 0.0;
  const double h = 1e-3 / p.omega_c();
  for (int i = 0; i <= 64; ++i) {
    const double t = period * i / 64.0;
    const PhaseSpacePoint s = analytic_trajectory(p, opt.orbit, t);
    const PhaseSpacePoint d = analytic_rate(p, opt.orbit, t, h);
    const Eigen::Vector2d force = (qB / p.m) * Eigen::Vector2d(s.p.y(), -s.p.x());
    ode = std::max(ode, rel((d.x - s.p / p.m).norm(), tref / p.m));
    ode = std::max(ode, rel((d.p - force).norm(), tref * p.omega_c()));
  }
  rep.check("analytic.ode", ode, 1e-10);

  // Poisson-bracket identities, coefficient by coefficient.
  using namespace obs;
  const PolyObservable H = energy(p);
  const PolyObservable Mr = rotation(p);
  const std::array<PolyObservable, 2> T{translation(0, p), translation(1, p)};
  const std::array<PolyObservable, 2> XC{magnetic_centre_offset(0, p), magnetic_centre_offset(1, p)};
  const auto one = PolyObservable::constant(1.0, kObservableMaxDegree);
  double poisson = 0.0;
  auto pb = [&](const PolyObservable& f, const PolyObservable& g) { return poisson_bracket(f, g, p); };
  poisson = std::max(poisson, coefficient_gap(pb(T[0], T[1]), one * (-qB)));
  for (int i = 0; i < 2; ++i) {
    const double e = i == 0 ? 1.0 : -1.0;
    poisson = std::max(poisson, coefficient_gap(pb(T[i], H), PolyObservable{}));
    poisson = std::max(poisson, coefficient_gap(pb(T[i], Mr), T[1 - i] * (-e)));
    poisson = std::max(poisson, coefficient_gap(pb(coordinate(i), T[0] * 0.3 + T[1] * -1.7),
                                                one * (i == 0 ? 0.3 : -1.7)));
    poisson = std::max(poisson, coefficient_gap(pb(momentum(i), T[0] * 0.3 + T[1] * -1.7), PolyObservable{}));
    poisson = std::max(poisson, coefficient_gap(pb(coordinate(i), Mr), coordinate(1 - i) * (-e)));
    poisson = std::max(poisson, coefficient_gap(pb(momentum(i), Mr), momentum(1 - i) * (-e)));
  }
  poisson = std::max(poisson, coefficient_gap(pb(Mr, H), PolyObservable{}));
  poisson = std::max(poisson, coefficient_gap(pb(XC[0], XC[1]), one * (-1.0 / qB)));
  // Exact for parameters whose products round exactly (e.g. m = q = B = 1);
  // otherwise allow one rounding per coefficient.
  const double scale = std::max({1.0, std::abs(qB), qB * qB, 1.0 / std::abs(qB), 2.0 * p.m});
  const double exact = 4.0 * std::numeric_limits<double>::epsilon() * scale;
  rep.check("poisson.identities", poisson, exact);
  const PolyObservable relation_poly = T[0] * T[0] + T[1] * T[1] - H * (2.0 * p.m) - Mr * (2.0 * qB);
  double rel_gap = 0.0;
  for (const auto& [e, c] : relation_poly.terms()) rel_gap = std::max(rel_gap, std::abs(c));
  rep.check("relation.coefficients", rel_gap, exact);
  return out;
}

}  // namespace landau
