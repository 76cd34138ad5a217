#include "landau/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace landau {

PhaseSpacePoint analytic_trajectory(const PhysicalParams& p, const TrajectoryParams& tp,
                                    double t) {
  if (tp.E < 0.0) throw std::invalid_argument("orbit energy must be >= 0");
  const double w = p.omega_c();
  const double s = p.s();
  const double phase = w * (t - tp.t0);
  const double radius = std::sqrt(2.0 * tp.E / p.m) / w;
  const double pmag = std::sqrt(2.0 * p.m * tp.E);
  PhaseSpacePoint out;
  out.x = tp.xc + radius * Eigen::Vector2d(std::cos(phase), -s * std::sin(phase));
  out.p = -pmag * Eigen::Vector2d(std::sin(phase), s * std::cos(phase));
  return out;
}

namespace {

// dp/dt = (qB/m) eps p, eps_12 = +1
Eigen::Vector2d lorentz_rate(const PhysicalParams& prm, const Eigen::Vector2d& p) {
  return (prm.qB() / prm.m) * Eigen::Vector2d(p.y(), -p.x());
}

PhaseSpacePoint rk4_step(const PhysicalParams& prm, const PhaseSpacePoint& s, double dt) {
  const double inv_m = 1.0 / prm.m;
  const Eigen::Vector2d kx1 = s.p * inv_m;
  const Eigen::Vector2d kp1 = lorentz_rate(prm, s.p);
  const Eigen::Vector2d p2 = s.p + 0.5 * dt * kp1;
  const Eigen::Vector2d kx2 = p2 * inv_m;
  const Eigen::Vector2d kp2 = lorentz_rate(prm, p2);
  const Eigen::Vector2d p3 = s.p + 0.5 * dt * kp2;
  const Eigen::Vector2d kx3 = p3 * inv_m;
  const Eigen::Vector2d kp3 = lorentz_rate(prm, p3);
  const Eigen::Vector2d p4 = s.p + dt * kp3;
  const Eigen::Vector2d kx4 = p4 * inv_m;
  const Eigen::Vector2d kp4 = lorentz_rate(prm, p4);
  PhaseSpacePoint out;
  out.x = s.x + dt / 6.0 * (kx1 + 2.0 * kx2 + 2.0 * kx3 + kx4);
  out.p = s.p + dt / 6.0 * (kp1 + 2.0 * kp2 + 2.0 * kp3 + kp4);
  return out;
}

struct BorisCoefficients {
  double t;      // signed half-angle tangent
  double sfac;   // 2t / (1 + t^2)
  double chord;  // tan(theta/2) / (theta/2)
};

BorisCoefficients boris_coefficients(const PhysicalParams& prm, double dt) {
  const double half = 0.5 * prm.omega_c() * dt;
  const double t = std::tan(half);
  return {prm.s() * t, 2.0 * prm.s() * t / (1.0 + t * t), t / half};
}

PhaseSpacePoint boris_step(const PhysicalParams& prm, const BorisCoefficients& c,
                           const PhaseSpacePoint& s, double dt) {
  // Rotation of p by -s omega_c dt via the Boris half-angle construction with
  // the 2D cross product v x (t e3) = (t v2, -t v1).
  const Eigen::Vector2d& v = s.p;
  const Eigen::Vector2d vprime = v + c.t * Eigen::Vector2d(v.y(), -v.x());
  const Eigen::Vector2d vnew = v + c.sfac * Eigen::Vector2d(vprime.y(), -vprime.x());
  PhaseSpacePoint out;
  out.p = vnew;
  out.x = s.x + (0.5 * dt / prm.m) * c.chord * (v + vnew);
  return out;
}

}  // namespace

std::vector<PhaseSpacePoint> integrate(const PhysicalParams& p, const PhaseSpacePoint& s0,
                                       double dt, int n, Integrator method) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
  if (n < 1) throw std::invalid_argument("step count must be >= 1");
  std::vector<PhaseSpacePoint> out;
  out.reserve(n + 1);
  out.push_back(s0);
  const BorisCoefficients coeff = boris_coefficients(p, dt);
  for (int k = 0; k < n; ++k) {
    const PhaseSpacePoint& cur = out.back();
    out.push_back(method == Integrator::rk4 ? rk4_step(p, cur, dt)
                                            : boris_step(p, coeff, cur, dt));
  }
  return out;
}

NoetherCharges noether_charges(const PhysicalParams& p, const Point& x0,
                               const PhaseSpacePoint& s) {
  const Eigen::Vector2d u = s.x - x0;
  const double qB = p.qB();
  return {s.p.squaredNorm() / (2.0 * p.m), s.p.x() - qB * u.y(), s.p.y() + qB * u.x(),
          u.x() * s.p.y() - u.y() * s.p.x() + 0.5 * qB * u.squaredNorm()};
}

Point magnetic_centre(const PhysicalParams& p, const Point& x0, const Eigen::Vector2d& T) {
  return x0 + Eigen::Vector2d(T.y(), -T.x()) / p.qB();
}

Eigen::Vector2d canonical_momenta(const GaugeChoice& g, const PhysicalParams& p,
                                  const PhaseSpacePoint& s) {
  return s.p + p.q * vector_potential(g, p, s.x);
}

namespace obs {

PolyObservable coordinate(int i) { return PolyObservable::variable(i, kObservableMaxDegree); }

PolyObservable momentum(int i) {
  return PolyObservable::variable(2 + i, kObservableMaxDegree);
}

PolyObservable energy(const PhysicalParams& p) {
  return (momentum(0) * momentum(0) + momentum(1) * momentum(1)) * (0.5 / p.m);
}

PolyObservable translation(int i, const PhysicalParams& p) {
  // T_i = p_i - qB eps_ij u_j
  const double sign = i == 0 ? 1.0 : -1.0;
  return momentum(i) - sign * p.qB() * coordinate(1 - i);
}

PolyObservable rotation(const PhysicalParams& p) {
  return orbital_angular_momentum() +
         (0.5 * p.qB()) * (coordinate(0) * coordinate(0) + coordinate(1) * coordinate(1));
}

PolyObservable orbital_angular_momentum() {
  return coordinate(0) * momentum(1) - coordinate(1) * momentum(0);
}

PolyObservable magnetic_centre_offset(int i, const PhysicalParams& p) {
  const double sign = i == 0 ? 1.0 : -1.0;
  return translation(1 - i, p) * (sign / p.qB());
}

PolyObservable lift(const Poly2& f) {
  PolyObservable out(std::max(kObservableMaxDegree, f.max_degree()));
  for (const auto& [e, c] : f.terms()) out.add_term({e[0], e[1], 0, 0}, c);
  return out;
}

}  // namespace obs

PolyObservable poisson_bracket(const PolyObservable& f, const PolyObservable& g,
                               const PhysicalParams& p) {
  PolyObservable out(std::max(f.max_degree(), g.max_degree()));
  for (int i = 0; i < 2; ++i) {
    out += f.derivative(i) * g.derivative(2 + i);
    out -= f.derivative(2 + i) * g.derivative(i);
  }
  const PolyObservable mixed = f.derivative(2) * g.derivative(3) - f.derivative(3) * g.derivative(2);
  out += mixed * p.qB();
  return out;
}

PolyObservable canonical_bracket(const PolyObservable& f, const PolyObservable& g) {
  PolyObservable out(std::max(f.max_degree(), g.max_degree()));
  for (int i = 0; i < 2; ++i) {
    out += f.derivative(i) * g.derivative(2 + i);
    out -= f.derivative(2 + i) * g.derivative(i);
  }
  return out;
}

PolyObservable to_canonical(const PolyObservable& f, const GaugeChoice& g,
                            const PhysicalParams& p) {
  const auto a = vector_potential_poly(g, p.B);
  PolyObservable out = f;
  for (int i = 0; i < 2; ++i) {
    const PolyObservable replacement = obs::momentum(i) - p.q * obs::lift(a[i]);
    out = out.substitute(2 + i, replacement);
  }
  return out;
}

double evaluate(const PolyObservable& f, const Point& x0, const PhaseSpacePoint& s) {
  return f(std::array<double, 4>{s.x.x() - x0.x(), s.x.y() - x0.y(), s.p.x(), s.p.y()});
}

}  // namespace landau
