#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "landau/errors.hpp"
#include "landau/quadrature.hpp"
#include "landau/special.hpp"
#include "landau/waves.hpp"
#include "support.hpp"

using namespace landau;

namespace {

constexpr cdouble kI{0.0, 1.0};
const PhysicalParams kUnit{1, 1, 1, 1};
const PhysicalParams kOdd{1.7, -0.8, 1.3, 0.6};

double hermite_series(int n, double x) {
  double out = 0.0;
  for (int m = 0; 2 * m <= n; ++m)
    out += (m % 2 == 0 ? 1.0 : -1.0) * std::pow(2.0 * x, n - 2 * m) /
           (std::tgamma(m + 1.0) * std::tgamma(n - 2.0 * m + 1.0));
  return std::tgamma(n + 1.0) * out;
}

double laguerre_series(int n, int a, double x) {
  double out = 0.0;
  for (int i = 0; i <= n; ++i)
    out += (i % 2 == 0 ? 1.0 : -1.0) * std::tgamma(n + a + 1.0) /
           (std::tgamma(n - i + 1.0) * std::tgamma(a + i + 1.0)) * std::pow(x, i) / std::tgamma(i + 1.0);
  return out;
}

GaugeChoice odd_gauge() { return {0.37, {0.4, -0.3}, parse_poly("0.3*u1 - 0.2*u1*u2 + 0.05*u2^3")}; }

std::vector<WaveForm> sample_states(const GaugeChoice& g, const PhysicalParams& p) {
  std::vector<WaveForm> out;
  for (auto [np, nm] : {std::pair{0, 0}, {3, 1}, {1, 4}, {2, 2}}) out.push_back(psi_fock(g, p, np, nm));
  for (int n : {0, 2}) out.push_back(psi_T1(g, p, 0.6, n));
  return out;
}

// Points within a few magnetic lengths of x0.
std::vector<Point> probe_points(const Point& x0, double lam, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> out;
  for (int i = 0; i < count; ++i)
    out.push_back(x0 + lam * Point(test::uniform(rng, -2.5, 2.5), test::uniform(rng, -2.5, 2.5)));
  return out;
}

}  // namespace

TEST_SUITE("waves") {

TEST_CASE("special function examples") {
  CHECK(hermite(2, 1.0) == 2.0);
  CHECK(laguerre(1, 0, 0.5) == 0.5);
  CHECK(special_eval(HermiteKind{2}, 1.0) == 2.0);
  CHECK(special_eval(LaguerreKind{1, 0}, 0.5) == 0.5);
  CHECK(hermite(5, 0.7) == doctest::Approx(hermite_series(5, 0.7)).epsilon(1e-12));
}

TEST_CASE("recurrences against explicit series") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = test::uniform(rng, -3, 3);
    const int n = trial % 12;
    const int a = trial % 5;
    CHECK(hermite(n, x) == doctest::Approx(hermite_series(n, x)).epsilon(1e-11));
    CHECK(normalized_hermite(n, x) ==
          doctest::Approx(hermite_series(n, x) / std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0))).epsilon(1e-11));
    const double y = std::abs(x) * 2;
    CHECK(laguerre(n, a, y) == doctest::Approx(laguerre_series(n, a, y)).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("hermite differential equation and derivative identities") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = test::uniform(rng, -2, 2);
    const int n = trial % 15;
    const auto h = hermite_derivatives(n, x);
    const double scale = std::max({1.0, std::abs(h[2]), std::abs(2 * x * h[1]), std::abs(2.0 * n * h[0])});
    CHECK(std::abs(h[2] - 2 * x * h[1] + 2 * n * h[0]) / scale < 1e-9);
    const auto l = laguerre_derivatives(n, 2, x + 2);
    // x L'' + (m + 1 - x) L' + n L = 0
    const double xs = x + 2;
    const double ls = std::max({1.0, std::abs(xs * l[2]), std::abs(n * l[0])});
    CHECK(std::abs(xs * l[2] + (3 - xs) * l[1] + n * l[0]) / ls < 1e-9);
  }
}

TEST_CASE("wave function examples") {
  for (const auto& p : {kUnit, kOdd}) {
    const Point x0(0.2, -0.1);
    const GaugeChoice sym = symmetric_gauge(x0);
    const double w = p.omega_c();
    CHECK(std::abs(psi_T1(sym, p, 0.0, 0, x0) -
                   std::pow(p.m * w / (std::numbers::pi * p.hbar), 0.25) /
                       std::sqrt(2 * std::numbers::pi * p.hbar)) < 1e-14);
    CHECK(std::abs(psi_fock(sym, p, 0, 0, x0) - std::sqrt(p.m * w / (2 * std::numbers::pi * p.hbar))) < 1e-14);
    CHECK(std::abs(psi_fock(sym, p, 1, 0, x0)) == 0.0);
  }
}

TEST_CASE("T1 states peak on the magnetic centre line") {
  for (const auto& p : {kUnit, kOdd}) {
    const GaugeChoice g = odd_gauge();
    const double T1 = 0.8;
    const double centre = g.x0.y() - T1 / p.qB();
    const double lam = p.lambda();
    const double at = std::abs(psi_T1(g, p, T1, 0, {0.5, centre}));
    CHECK(at > std::abs(psi_T1(g, p, T1, 0, {0.5, centre + 0.01 * lam})));
    CHECK(at > std::abs(psi_T1(g, p, T1, 0, {0.5, centre - 0.01 * lam})));

    // Fixed-x1 density integrates to 1 / (2 pi hbar).
    for (int n : {0, 3}) {
      const QuadResult r = line_integral(
          [&](double x2) { return std::norm(psi_T1(g, p, T1, n, {1.0, x2})); },
          AxisSpec{Scheme::gauss_hermite, 60, centre, lam});
      CHECK(std::abs(r.value - 1.0 / (2 * std::numbers::pi * p.hbar)) < 1e-12);
    }
  }
}

TEST_CASE("analytic gradients against central differences") {
  for (const auto& p : {kUnit, kOdd}) {
    const GaugeChoice g = odd_gauge();
    const double h = 1e-4 * p.lambda();
    for (const auto& psi : sample_states(g, p)) {
      for (const Point& x : probe_points(g.x0, p.lambda(), 100, 31)) {
        const Eigen::Vector2cd grad = psi.gradient(x);
        for (int i = 0; i < 2; ++i) {
          Point e = Point::Zero();
          e[i] = h;
          const cdouble fd = (psi.value(x + e) - psi.value(x - e)) / (2 * h);
          const double scale = std::max(std::abs(grad[i]), std::abs(psi.value(x)) / p.lambda());
          if (scale < 1e-8) continue;
          CHECK(std::abs(fd - grad[i]) / scale < 1e-6);
        }
      }
    }
  }
}

TEST_CASE("hessian against differences of the gradient") {
  const GaugeChoice g = odd_gauge();
  const double h = 1e-5 * kOdd.lambda();
  for (const auto& psi : sample_states(g, kOdd)) {
    for (const Point& x : probe_points(g.x0, kOdd.lambda(), 20, 7)) {
      const CJet2 j = psi.jet(x);
      for (int i = 0; i < 2; ++i) {
        Point e = Point::Zero();
        e[i] = h;
        const Eigen::Vector2cd fd = (psi.gradient(x + e) - psi.gradient(x - e)) / (2 * h);
        const double scale = std::max(1e-3, j.hess.cwiseAbs().maxCoeff());
        CHECK((fd - j.hess.col(i)).cwiseAbs().maxCoeff() / scale < 1e-6);
      }
    }
  }
}

TEST_CASE("eigenrelations hold pointwise") {
  for (const auto& p : {kUnit, kOdd}) {
    const GaugeChoice g = odd_gauge();
    const auto H = position_op(Observable::H, g, p);
    const auto M3 = position_op(Observable::M3, g, p);
    const auto T1 = position_op(Observable::T1, g, p);
    const double lam = p.lambda();
    for (auto [np, nm] : {std::pair{0, 0}, {2, 1}, {1, 3}, {4, 4}}) {
      const WaveForm psi = psi_fock(g, p, np, nm);
      const double E = p.hbar * p.omega_c() * (nm + 0.5);
      const double L = p.s() * p.hbar * (np - nm);
      double peak = 0.0, resH = 0.0, resM = 0.0;
      for (const Point& x : probe_points(g.x0, 2.0 * lam, 200, 3)) {
        const cdouble v = psi.value(x);
        peak = std::max(peak, std::abs(v));
        resH = std::max(resH, std::abs(H.apply(psi, x) - E * v));
        resM = std::max(resM, std::abs(M3.apply(psi, x) - L * v));
      }
      CHECK(resH / (peak * p.hbar * p.omega_c()) < 1e-9);
      CHECK(resM / (peak * p.hbar) < 1e-9);
    }
    for (double t1 : {-0.7, 0.0, 1.3}) {
      const WaveForm psi = psi_T1(g, p, t1, 2);
      const Point centre(g.x0.x(), g.x0.y() - t1 / p.qB());
      double peak = 0.0, res = 0.0, resH = 0.0;
      for (const Point& x : probe_points(centre, 2.0 * lam, 200, 4)) {
        const cdouble v = psi.value(x);
        peak = std::max(peak, std::abs(v));
        res = std::max(res, std::abs(T1.apply(psi, x) - t1 * v));
        resH = std::max(resH, std::abs(H.apply(psi, x) - 2.5 * p.hbar * p.omega_c() * v));
      }
      const double ts = std::sqrt(p.hbar * p.m * p.omega_c());
      CHECK(res / (peak * ts) < 1e-9);
      CHECK(resH / (peak * p.hbar * p.omega_c()) < 1e-9);
    }
  }
}

TEST_CASE("wave functions are gauge covariant") {
  std::mt19937_64 rng(44);
  const Point x0(-0.2, 0.5);
  for (int trial = 0; trial < 20; ++trial) {
    const GaugeChoice g1{test::uniform(rng, -2, 2), x0, test::random_poly(rng, 3)};
    const GaugeChoice g2{test::uniform(rng, -2, 2), x0, test::random_poly(rng, 3)};
    const Poly2 d = gauge_delta(g1, g2, kOdd.B);
    for (const Point& x : probe_points(x0, kOdd.lambda(), 10, trial)) {
      const cdouble ph = gauge_phase(d, kOdd.q, kOdd.hbar, x0, x);
      CHECK(std::abs(std::abs(ph) - 1.0) < 1e-15);
      CHECK(std::abs(psi_fock(g2, kOdd, 2, 1, x) - ph * psi_fock(g1, kOdd, 2, 1, x)) < 1e-13);
      CHECK(std::abs(psi_T1(g2, kOdd, 0.4, 1, x) - ph * psi_T1(g1, kOdd, 0.4, 1, x)) < 1e-13);
    }
  }
  CHECK(gauge_phase(Poly2{}, 1.0, 1.0, x0, {3, 4}) == cdouble(1.0));
}

TEST_CASE("flat connection representation") {
  const Point x0 = Point::Zero();
  const double hbar = 0.6;
  // plane wave
  WaveForm wave;
  wave.hbar = hbar;
  wave.phase = parse_poly("0.7*u1 - 1.2*u2").with_max_degree(kWaveMaxDegree);
  for (const Point& x : probe_points(x0, 1.0, 10, 5)) {
    CHECK(std::abs(flat_connection_rep(Poly2{}, wave, 0, x) - 0.7 * wave.value(x)) < 1e-14);
    CHECK(std::abs(flat_connection_rep(Poly2{}, wave, 1, x) + 1.2 * wave.value(x)) < 1e-14);
  }

  // pure gauge conjugation
  const Poly2 Lambda = parse_poly("0.3*u1^2*u2 - 0.8*u2 + 0.1*u1^3");
  const WaveForm chi = psi_fock(symmetric_gauge(), kOdd, 2, 1);
  const WaveForm shifted = chi.rephased(Lambda * -1.0);
  for (const Point& x : probe_points(x0, kOdd.lambda(), 30, 6)) {
    const cdouble ph = std::polar(1.0, -eval_at(Lambda, x0, x) / kOdd.hbar);
    for (int i = 0; i < 2; ++i)
      CHECK(std::abs(flat_connection_rep(Lambda, shifted, i, x) -
                     ph * flat_connection_rep(Poly2{}, chi, i, x)) < 1e-13);
    // same identity for a second-order operator
    const auto H = position_op(Observable::H, symmetric_gauge(), kOdd);
    CHECK(std::abs(with_connection(H, Lambda, kOdd.hbar).apply(shifted, x) - ph * H.apply(chi, x)) < 1e-12);
  }
}

TEST_CASE("operator algebra on DiffOpSpec") {
  const GaugeChoice g = odd_gauge();
  const WaveForm psi = psi_fock(g, kOdd, 1, 2);
  const auto p1 = position_op(Observable::p1, g, kOdd);
  const auto p2 = position_op(Observable::p2, g, kOdd);
  const auto comm = compose(p1, p2) - compose(p2, p1);
  for (const Point& x : probe_points(g.x0, kOdd.lambda(), 20, 9))
    CHECK(std::abs(comm.apply(psi, x) - kI * kOdd.hbar * kOdd.qB() * psi.value(x)) < 1e-12);
  CHECK(p1.first_order());
  CHECK_FALSE(compose(p1, p1).first_order());
  CHECK_THROWS(compose(compose(p1, p1), p1));
}

TEST_CASE("T1 representation kernels") {
  for (const auto& p : {kUnit, kOdd}) {
    const double c = std::sqrt(p.hbar * p.m * p.omega_c() / 2);
    const auto chi0 = hermite_state(0, p), chi1 = hermite_state(1, p);
    const auto t2 = t1rep_apply(Observable::T2, chi0, 0, p);
    for (double T1 : {-1.1, -0.2, 0.0, 0.5, 1.9}) {
      CHECK(std::abs(t2(T1) - p.s() * c * chi1(T1)[0]) < 1e-13);
      CHECK(t1rep_apply(Observable::T1, chi1, 0, p)(0.0) == cdouble(0.0));
      for (int np = 0; np <= 6; ++np)
        for (int n = 0; n <= 3; ++n) {
          const auto chi = hermite_state(np, p);
          CHECK(std::abs(t1rep_apply(Observable::M3, chi, n, p)(T1) -
                         p.s() * p.hbar * (np - n) * chi(T1)[0]) < 1e-12);
        }
      // <T1|n+> is the conjugate of the change-of-basis coefficient
      CHECK(std::abs(hermite_state(3, p)(T1)[0] - std::conj(change_of_basis(3, T1, p))) < 1e-15);
    }
  }
  CHECK_THROWS_AS(t1rep_apply(Observable::p1, hermite_state(0, kUnit), 0, kUnit), UnknownName);
}

}
