#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "landau/classical.hpp"
#include "support.hpp"

using namespace landau;

namespace {

const PhysicalParams kUnit{1, 1, 1, 1};
const PhysicalParams kOdd{1.7, -0.8, 1.3, 0.6};

// Second derivative by a 5-point stencil, used as the ODE oracle.
PhaseSpacePoint fd_accel(const PhysicalParams& p, const TrajectoryParams& tp, double t, double h) {
  auto at = [&](double dt) { return analytic_trajectory(p, tp, t + dt); };
  PhaseSpacePoint d;
  const auto a = at(-2 * h), b = at(-h), c = at(0), e = at(h), f = at(2 * h);
  d.x = (-a.x + 16 * b.x - 30 * c.x + 16 * e.x - f.x) / (12 * h * h);
  d.p = (a.x - 8 * b.x + 8 * e.x - f.x) / (12 * h);  // velocity, stored in p
  return d;
}

double max_coefficient(const PolyObservable& f) {
  double out = 0.0;
  for (const auto& [e, c] : f.terms()) out = std::max(out, std::abs(c));
  return out;
}

}  // namespace

TEST_SUITE("classical") {

TEST_CASE("analytic trajectory examples") {
  const auto s = analytic_trajectory(kUnit, {0.5, Point::Zero(), 0.0}, 0.0);
  CHECK(s.x.x() == doctest::Approx(1.0));
  CHECK(std::abs(s.x.y()) < 1e-15);
  CHECK(std::abs(s.p.x()) < 1e-15);
  CHECK(s.p.y() == doctest::Approx(-1.0));

  for (double t : {0.0, 0.3, 7.1}) {
    const auto z = analytic_trajectory(kOdd, {0.0, {1.0, 2.0}, 0.4}, t);
    CHECK(z.x == Point(1.0, 2.0));
    CHECK(z.p.isZero(0.0));
  }
}

TEST_CASE("analytic trajectory solves the Lorentz equation") {
  std::mt19937_64 rng(21);
  for (const auto& p : {kUnit, kOdd, PhysicalParams{2, -3, 4, 1}}) {
    const TrajectoryParams tp{0.8, {0.2, -0.4}, 0.3};
    const double w = p.omega_c();
    for (int i = 0; i < 10; ++i) {
      const double t = test::uniform(rng, 0.0, 20.0) / w;
      const PhaseSpacePoint d = fd_accel(p, tp, t, 1e-3 / w);
      const Eigen::Vector2d v = d.p;
      const Eigen::Vector2d res = p.m * d.x - p.qB() * Eigen::Vector2d(v.y(), -v.x());
      const double scale = p.m * w * w * std::sqrt(2 * tp.E / p.m) / w;
      CHECK(res.norm() / scale < 1e-8);
      // p = m dx/dt
      const auto s = analytic_trajectory(p, tp, t);
      CHECK((s.p - p.m * v).norm() / std::sqrt(2 * p.m * tp.E) < 1e-10);
    }
  }
}

TEST_CASE("noether charges examples") {
  const PhaseSpacePoint s{{1.0, 0.0}, {0.0, 1.0}};
  const NoetherCharges c = noether_charges(kUnit, Point::Zero(), s);
  CHECK(c.E == 0.5);
  CHECK(c.T1 == 0.0);
  CHECK(c.T2 == 2.0);
  CHECK(c.M3 == 1.5);
  CHECK(c.T1 * c.T1 + c.T2 * c.T2 == 2 * c.E + 2 * c.M3);

  const NoetherCharges z = noether_charges(kOdd, {0.5, 0.5}, {{0.5, 0.5}, {0.0, 0.0}});
  CHECK(z.E == 0.0);
  CHECK(z.T1 == 0.0);
  CHECK(z.T2 == 0.0);
  CHECK(z.M3 == 0.0);
}

TEST_CASE("charges are constant along the analytic orbit") {
  for (const auto& p : {kUnit, kOdd}) {
    const TrajectoryParams tp{1.3, {0.4, -0.9}, 0.2};
    const Point x0(-0.3, 0.6);
    const NoetherCharges c0 = noether_charges(p, x0, analytic_trajectory(p, tp, 0.0));
    for (int i = 1; i <= 20; ++i) {
      const NoetherCharges c = noether_charges(p, x0, analytic_trajectory(p, tp, 0.37 * i));
      CHECK(std::abs(c.E - c0.E) < 1e-12);
      CHECK(std::abs(c.T1 - c0.T1) < 1e-12);
      CHECK(std::abs(c.T2 - c0.T2) < 1e-12);
      CHECK(std::abs(c.M3 - c0.M3) < 1e-12);
    }
  }
}

TEST_CASE("magnetic centre") {
  CHECK(magnetic_centre(kUnit, {0.3, 0.4}, {0, 0}) == Point(0.3, 0.4));
  CHECK(magnetic_centre(kUnit, Point::Zero(), {0, 2}) == Point(2, 0));

  // Centre from charges matches the centre of a circle fitted through the orbit.
  for (const auto& p : {kUnit, kOdd}) {
    const TrajectoryParams tp{0.9, {1.2, -0.7}, 0.0};
    const Point x0(0.1, 0.2);
    const auto s = analytic_trajectory(p, tp, 0.0);
    const NoetherCharges c = noether_charges(p, x0, s);
    const Point xc = magnetic_centre(p, x0, {c.T1, c.T2});
    // three points on the orbit determine the circle
    const double w = p.omega_c();
    const Point a = analytic_trajectory(p, tp, 0.0).x;
    const Point b = analytic_trajectory(p, tp, 1.0 / w).x;
    const Point d = analytic_trajectory(p, tp, 2.5 / w).x;
    Eigen::Matrix2d M;
    M << 2 * (b - a).transpose(), 2 * (d - a).transpose();
    const Eigen::Vector2d rhs(b.squaredNorm() - a.squaredNorm(), d.squaredNorm() - a.squaredNorm());
    const Point fitted = M.partialPivLu().solve(rhs);
    CHECK((fitted - xc).norm() < 1e-10);
    CHECK((xc - tp.xc).norm() < 1e-12);
  }
}

TEST_CASE("boris follows the orbit and keeps |p|") {
  for (const auto& p : {kUnit, kOdd}) {
    const TrajectoryParams tp{0.5, {0.3, 0.1}, 0.0};
    const double T = 2 * std::numbers::pi / p.omega_c();
    const auto s0 = analytic_trajectory(p, tp, 0.0);
    const auto path = integrate(p, s0, T / 1000, 1000, Integrator::boris);
    REQUIRE(path.size() == 1001);
    CHECK((path.back().x - s0.x).norm() < 1e-6 * p.lambda());
    for (const auto& s : path) CHECK(std::abs(s.p.norm() - s0.p.norm()) < 1e-13 * s0.p.norm());
  }
}

TEST_CASE("rk4 energy drift over ten periods") {
  const TrajectoryParams tp{0.5, Point::Zero(), 0.0};
  const double T = 2 * std::numbers::pi / kOdd.omega_c();
  const auto s0 = analytic_trajectory(kOdd, tp, 0.0);
  const auto path = integrate(kOdd, s0, T / 1000, 10000, Integrator::rk4);
  const double E0 = s0.p.squaredNorm() / (2 * kOdd.m);
  double drift = 0.0;
  for (const auto& s : path) drift = std::max(drift, std::abs(s.p.squaredNorm() / (2 * kOdd.m) - E0));
  CHECK(drift / E0 < 1e-8);
}

TEST_CASE("zero momentum is a fixed point") {
  for (auto method : {Integrator::rk4, Integrator::boris}) {
    const PhaseSpacePoint s0{{0.4, -0.2}, {0.0, 0.0}};
    for (const auto& s : integrate(kOdd, s0, 0.01, 50, method)) {
      CHECK(s.x == s0.x);
      CHECK(s.p.isZero(0.0));
    }
  }
  CHECK_THROWS_AS(integrate(kUnit, {}, 0.0, 10, Integrator::rk4), std::invalid_argument);
  CHECK_THROWS_AS(integrate(kUnit, {}, 0.1, 0, Integrator::boris), std::invalid_argument);
}

TEST_CASE("poisson bracket examples") {
  using namespace obs;
  CHECK(poisson_bracket(coordinate(0), momentum(0), kOdd) == PolyObservable::constant(1.0));
  CHECK(poisson_bracket(coordinate(0), momentum(1), kOdd).is_zero());
  CHECK(poisson_bracket(translation(0, kOdd), translation(1, kOdd), kOdd) ==
        PolyObservable::constant(-kOdd.qB()));
  CHECK(poisson_bracket(translation(0, kUnit), energy(kUnit), kUnit).is_zero());
  CHECK(poisson_bracket(translation(1, kUnit), energy(kUnit), kUnit).is_zero());
  CHECK(poisson_bracket(rotation(kUnit), energy(kUnit), kUnit).is_zero());
}

TEST_CASE("charge relation and symmetry generation are exact identities") {
  using namespace obs;
  const auto& p = kUnit;
  const auto T1 = translation(0, p), T2 = translation(1, p), M = rotation(p), H = energy(p);
  CHECK((T1 * T1 + T2 * T2 - H * (2 * p.m) - M * (2 * p.qB())).is_zero());
  for (int i = 0; i < 2; ++i) {
    const double e = i == 0 ? 1.0 : -1.0;
    const auto T = translation(i, p);
    const auto Tother = translation(1 - i, p);
    CHECK(poisson_bracket(T, M, p) == Tother * -e);
    CHECK(poisson_bracket(coordinate(i), M, p) == coordinate(1 - i) * -e);
    CHECK(poisson_bracket(momentum(i), M, p) == momentum(1 - i) * -e);
    CHECK(poisson_bracket(coordinate(i), T1 * 2.0 + T2 * -3.0, p) ==
          PolyObservable::constant(i == 0 ? 2.0 : -3.0));
    CHECK(poisson_bracket(momentum(i), T1 * 2.0 + T2 * -3.0, p).is_zero());
  }
  CHECK(poisson_bracket(magnetic_centre_offset(0, p), magnetic_centre_offset(1, p), p) ==
        PolyObservable::constant(-1.0 / p.qB()));
}

TEST_CASE("bracket relations for general parameters to rounding") {
  using namespace obs;
  const auto& p = kOdd;
  const auto T1 = translation(0, p), T2 = translation(1, p), M = rotation(p), H = energy(p);
  CHECK(max_coefficient(T1 * T1 + T2 * T2 - H * (2 * p.m) - M * (2 * p.qB())) < 1e-15);
  CHECK(max_coefficient(poisson_bracket(M, H, p)) < 1e-15);
  CHECK(max_coefficient(poisson_bracket(magnetic_centre_offset(0, p), magnetic_centre_offset(1, p), p) -
                        PolyObservable::constant(-1.0 / p.qB())) < 1e-15);
}

TEST_CASE("poisson bracket is antisymmetric and satisfies Jacobi") {
  std::mt19937_64 rng(4);
  auto rand_obs = [&] {
    PolyObservable f(kObservableMaxDegree);
    for (int k = 0; k < 4; ++k) {
      std::array<int, 4> e{};
      for (int& x : e) x = std::uniform_int_distribution<int>(0, 1)(rng);
      f.add_term(e, std::round(test::uniform(rng, -1, 1) * 100) / 100);
    }
    return f;
  };
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = rand_obs(), g = rand_obs(), h = rand_obs();
    const auto pb = [](const PolyObservable& a, const PolyObservable& b) { return poisson_bracket(a, b, kUnit); };
    CHECK(max_coefficient(pb(f, g) + pb(g, f)) < 1e-14);
    CHECK(max_coefficient(pb(f, pb(g, h)) + pb(g, pb(h, f)) + pb(h, pb(f, g))) < 1e-12);
  }
}

TEST_CASE("canonical momenta") {
  const PhaseSpacePoint s{{0.0, 0.0}, {0.7, -0.3}};
  const Eigen::Vector2d pi = canonical_momenta(symmetric_gauge(), kUnit, s);
  CHECK(pi == s.p);
  const Eigen::Vector2d l = canonical_momenta(landau_gauge(1), kUnit, {{0.0, 1.0}, {1.0, 0.0}});
  CHECK(l.x() == 0.0);
  CHECK(l.y() == 0.0);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Point x0(0.2, -0.5);
    const GaugeChoice g1{test::uniform(rng, -2, 2), x0, test::random_poly(rng, 4)};
    const GaugeChoice g2{test::uniform(rng, -2, 2), x0, test::random_poly(rng, 4)};
    const PhaseSpacePoint z{{test::uniform(rng, -2, 2), test::uniform(rng, -2, 2)},
                            {test::uniform(rng, -2, 2), test::uniform(rng, -2, 2)}};
    const Poly2 d = gauge_delta(g1, g2, kOdd.B);
    const Eigen::Vector2d diff = canonical_momenta(g2, kOdd, z) - canonical_momenta(g1, kOdd, z);
    const Eigen::Vector2d grad(eval_at(d.derivative(0), x0, z.x), eval_at(d.derivative(1), x0, z.x));
    CHECK((diff - kOdd.q * grad).norm() < 1e-12);
  }
}

TEST_CASE("canonical bracket reproduces the magnetic bracket") {
  using namespace obs;
  const GaugeChoice g{0.37, Point::Zero(), parse_poly("0.2*u1^2*u2 - u2")};
  const auto T1 = translation(0, kOdd), T2 = translation(1, kOdd);
  const auto a = to_canonical(T1, g, kOdd), b = to_canonical(T2, g, kOdd);
  CHECK(max_coefficient(canonical_bracket(a, b) - PolyObservable::constant(-kOdd.qB())) < 1e-14);
  const auto p1 = to_canonical(momentum(0), g, kOdd), p2 = to_canonical(momentum(1), g, kOdd);
  CHECK(max_coefficient(canonical_bracket(p1, p2) - PolyObservable::constant(kOdd.qB())) < 1e-14);
}

}
