#include <doctest.h>

#include <cmath>
#include <numbers>

#include "landau/errors.hpp"
#include "landau/fockspace.hpp"
#include "landau/quadrature.hpp"
#include "support.hpp"

using namespace landau;

namespace {

constexpr cdouble kI{0.0, 1.0};
const PhysicalParams kUnit{1, 1, 1, 1};
const PhysicalParams kOdd{1.7, -0.8, 1.3, 0.6};

// Annihilator of one sector built entry by entry.
Eigen::MatrixXcd lower_oracle(int nmax, bool plus) {
  const int d = (nmax + 1) * (nmax + 1);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int a = 0; a <= nmax; ++a)
    for (int b = 0; b <= nmax; ++b) {
      const int n = plus ? a : b;
      if (n == 0) continue;
      const int from = a * (nmax + 1) + b;
      const int to = plus ? (a - 1) * (nmax + 1) + b : a * (nmax + 1) + b - 1;
      m(to, from) = std::sqrt(static_cast<double>(n));
    }
  return m;
}

}  // namespace

TEST_SUITE("fockspace") {

TEST_CASE("basis indexing is a bijection") {
  const FockBasis b(5);
  CHECK(b.dim() == 36);
  for (Eigen::Index i = 0; i < b.dim(); ++i) {
    const auto [np, nm] = b.occupation(i);
    CHECK(b.index(np, nm) == i);
  }
  CHECK(b.index(2, 3) == 2 * 6 + 3);
  CHECK(b.interior(b.index(3, 3), 2));
  CHECK_FALSE(b.interior(b.index(4, 0), 2));
}

TEST_CASE("label maps") {
  CHECK(to_fock({2, 3}).n_plus == 5);
  CHECK(to_fock({-3, 3}).n_plus == 0);
  CHECK(to_fock({-3, 3}).n_minus == 3);
  CHECK(to_angular({1, 4}).ell == -3);
  CHECK_THROWS_AS(to_fock({-2, 1}), std::invalid_argument);
}

TEST_CASE("ladder operators match the entrywise oracle") {
  const int nmax = 6;
  const FockBasis b(nmax);
  const LadderOps l = ladder_ops(b);
  CHECK((l.a_plus.matrix - lower_oracle(nmax, true)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((l.a_minus.matrix - lower_oracle(nmax, false)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(l.a_plus_dag.matrix == l.a_plus.matrix.adjoint());
  CHECK(l.a_minus.excursion == 1);

  CHECK(l.a_plus_dag.matrix(b.index(1, 0), b.index(0, 0)) == 1.0);
  CHECK(std::abs(l.a_minus.matrix(b.index(0, 2), b.index(0, 3)) - std::sqrt(3.0)) < 1e-15);

  const FockOperator ccr = commutator(l.a_minus, l.a_minus_dag) - identity(b);
  CHECK(interior_deviation(ccr, b, 2) < 1e-14);
  const FockOperator cross = commutator(l.a_plus, l.a_minus_dag);
  CHECK(interior_deviation(cross, b, 2) == 0.0);
  CHECK_THROWS_AS(ladder_ops(FockBasis(0)), TruncationError);
}

TEST_CASE("observable examples") {
  const FockBasis b(6);
  for (const auto& p : {kUnit, kOdd}) {
    const FockOperator H = build_observable(Observable::H, p, Point::Zero(), b);
    for (int np = 0; np <= 6; ++np)
      for (int nm = 0; nm <= 6; ++nm)
        CHECK(H.matrix(b.index(np, nm), b.index(np, nm)) == p.hbar * p.omega_c() * (nm + 0.5));
    const FockOperator M3 = build_observable(Observable::M3, p, Point::Zero(), b);
    CHECK(M3.matrix(0, 0) == 0.0);
  }
  const FockOperator T1 = build_observable(Observable::T1, kUnit, Point::Zero(), b);
  const FockLabel a = to_fock({1, 0}), c = to_fock({0, 0});
  CHECK(std::abs(T1.matrix(b.index(a.n_plus, a.n_minus), b.index(c.n_plus, c.n_minus)) -
                 kI * std::sqrt(0.5)) < 1e-15);
  CHECK_THROWS_AS(observable_from_name("Q"), UnknownName);
  CHECK(observable_from_name("xc2") == Observable::xc2);
}

TEST_CASE("observables are hermitian") {
  const FockBasis b(8);
  const Point x0(0.3, -1.2);
  for (auto o : {Observable::H, Observable::T1, Observable::T2, Observable::M3, Observable::p1,
                 Observable::p2, Observable::L3, Observable::xc1, Observable::xc2, Observable::x1,
                 Observable::x2}) {
    const Eigen::MatrixXcd m = build_observable(o, kOdd, x0, b).matrix;
    CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("selection rules") {
  const FockBasis b(8);
  const auto p1 = build_observable(Observable::p1, kOdd, Point::Zero(), b).matrix;
  const auto T1 = build_observable(Observable::T1, kOdd, Point::Zero(), b).matrix;
  for (Eigen::Index i = 0; i < b.dim(); ++i)
    for (Eigen::Index j = 0; j < b.dim(); ++j) {
      const auto [ap, am] = b.occupation(i);
      const auto [bp, bm] = b.occupation(j);
      if (std::abs(am - bm) != 1) CHECK(p1(i, j) == 0.0);
      if (am == bm && std::abs((ap - am) - (bp - bm)) != 1) CHECK(T1(i, j) == 0.0);
    }
}

TEST_CASE("fock matrices agree with the closed-form table on the interior") {
  const int nmax = 12;
  const FockBasis b(nmax);
  for (const auto& p : {kUnit, kOdd}) {
    for (auto o : {Observable::H, Observable::T1, Observable::T2, Observable::M3, Observable::p1,
                   Observable::p2, Observable::L3}) {
      const auto m = build_observable(o, p, Point::Zero(), b).matrix;
      double dev = 0.0;
      for (int n1 = 0; n1 <= nmax / 2; ++n1)
        for (int l1 = -n1; l1 <= nmax / 2; ++l1)
          for (int n2 = 0; n2 <= nmax / 2; ++n2)
            for (int l2 = -n2; l2 <= nmax / 2; ++l2) {
              const FockLabel a = to_fock({l1, n1}), c = to_fock({l2, n2});
              const cdouble v = table2_element(o, l1, n1, l2, n2, p).value;
              dev = std::max(dev, std::abs(m(b.index(a.n_plus, a.n_minus), b.index(c.n_plus, c.n_minus)) - v));
            }
      CHECK(dev < 1e-12);
    }
  }
}

TEST_CASE("table examples") {
  CHECK(table2_element(Observable::M3, 3, 2, 3, 2, kUnit).value == cdouble(3.0));
  CHECK(table2_element(Observable::p1, 0, 0, 0, 0, kUnit).value == cdouble(0.0));
  CHECK(table2_element(Observable::L3, 0, 1, 0, 1, kUnit).value == cdouble(-3.0));
  CHECK_FALSE(table2_element(Observable::L3, 0, 1, 0, 1, kUnit).beyond_table);
  CHECK(table2_element(Observable::L3, 0, 1, 0, 2, kUnit).beyond_table);
  CHECK_THROWS_AS(table2_element(Observable::x1, 0, 0, 0, 0, kUnit), UnknownName);
}

TEST_CASE("commutator suite") {
  const int nmax = 14;
  const FockBasis b(nmax);
  const auto& p = kOdd;
  const Point x0(0.4, 0.1);
  auto op = [&](Observable o) { return build_observable(o, p, x0, b); };
  const FockOperator id = identity(b);
  const double hb = p.hbar;
  const FockOperator zero{Eigen::MatrixXcd::Zero(b.dim(), b.dim()), 0};
  const int margin = 3;
  CHECK(commutator_check(op(Observable::T1), op(Observable::T2), (-kI * double(p.s()) * hb * p.m * p.omega_c()) * id, b, margin) < 1e-12);
  CHECK(commutator_check(op(Observable::p1), op(Observable::p2), (kI * hb * p.qB()) * id, b, margin) < 1e-12);
  CHECK(commutator_check(op(Observable::x1), op(Observable::p1), (kI * hb) * id, b, margin) < 1e-12);
  CHECK(commutator_check(op(Observable::x1), op(Observable::p2), zero, b, margin) < 1e-12);
  CHECK(commutator_check(op(Observable::xc1), op(Observable::xc2), (-kI * hb / p.qB()) * id, b, margin) < 1e-12);
  CHECK(commutator_check(op(Observable::xc1), op(Observable::p2), zero, b, margin) < 1e-12);
  CHECK(commutator_check(op(Observable::T1), op(Observable::M3), (-kI * hb) * op(Observable::T2), b, margin) < 1e-12);
  CHECK(commutator_check(op(Observable::T2), op(Observable::M3), (kI * hb) * op(Observable::T1), b, margin) < 1e-12);
  CHECK(commutator_check(op(Observable::M3), op(Observable::H), zero, b, margin) < 1e-12);
  CHECK(commutator_check(op(Observable::L3), op(Observable::M3), zero, b, margin) < 1e-12);
  const double sw = p.s() * hb * p.omega_c();
  CHECK(commutator_check(op(Observable::p1), op(Observable::H), (kI * sw) * op(Observable::p2), b, margin) < 1e-12);
  CHECK(commutator_check(op(Observable::p2), op(Observable::H), (-kI * sw) * op(Observable::p1), b, margin) < 1e-12);
  CHECK(commutator_check(op(Observable::T1), op(Observable::L3), (-kI * hb) * op(Observable::p2), b, margin) < 1e-12);
  CHECK(commutator_check(op(Observable::p1), op(Observable::L3),
                         (kI * hb) * op(Observable::T2) - (2.0 * kI * hb) * op(Observable::p2), b, margin) < 1e-12);

  const FockOperator rel = op(Observable::T1) * op(Observable::T1) + op(Observable::T2) * op(Observable::T2) -
                           (2.0 * p.m) * op(Observable::H) - (2.0 * p.qB()) * op(Observable::M3);
  CHECK(interior_deviation(rel, b, 2) < 1e-12);
}

TEST_CASE("commutator checks guard the margin") {
  const FockBasis b(4);
  const auto T1 = build_observable(Observable::T1, kUnit, Point::Zero(), b);
  CHECK_THROWS_AS(commutator_check(T1, T1, identity(b), b, 1), TruncationError);
  CHECK_THROWS_AS(commutator_check(T1, T1, identity(b), b, 5), TruncationError);
  // Without enough margin the truncation edge is visible.
  const FockOperator ccr = commutator(ladder_ops(b).a_plus, ladder_ops(b).a_plus_dag);
  CHECK((ccr.matrix - identity(b).matrix).cwiseAbs().maxCoeff() > 1.0);
}

TEST_CASE("polynomial operators") {
  const FockBasis b(8);
  CHECK(poly_operator(Poly2::constant(1.0), kOdd, b).matrix == identity(b).matrix);
  const auto u1 = poly_operator(Poly2::variable(0), kOdd, b);
  CHECK(u1.matrix(0, 0) == 0.0);
  const auto r2 = poly_operator(parse_poly("u1^2 + u2^2"), kOdd, b);
  const double lam2 = kOdd.lambda() * kOdd.lambda();
  CHECK(std::abs(r2.matrix(0, 0) - 2.0 * lam2) < 1e-14);
  CHECK(r2.excursion == 2);
  CHECK_THROWS_AS(poly_operator(parse_poly("u1^5*u2"), kOdd, FockBasis(5)), TruncationError);

  // u1 u2 and u2 u1 agree away from the edge
  const auto pos = poly_operator(Poly2::variable(1), kOdd, b);
  CHECK(interior_deviation(commutator(u1, pos), b, 2) < 1e-14);
}

TEST_CASE("gauge variant matrices") {
  const FockBasis b(10);
  const Point x0(0.2, 0.3);
  const auto M3 = build_observable(Observable::M3, kOdd, x0, b);
  const auto T1 = build_observable(Observable::T1, kOdd, x0, b);
  const auto L3c = gauge_variant_matrix(GaugeVariant::L3c, symmetric_gauge(x0), kOdd, b);
  CHECK((L3c.matrix - M3.matrix).cwiseAbs().maxCoeff() == 0.0);
  const auto pi1 = gauge_variant_matrix(GaugeVariant::pi1, landau_gauge(1, x0), kOdd, b);
  CHECK((pi1.matrix - T1.matrix).cwiseAbs().maxCoeff() == 0.0);

  const PhysicalParams p{1, 1, 1, 1};
  const GaugeChoice g{0.0, x0, parse_poly("u1")};
  const auto shifted = gauge_variant_matrix(GaugeVariant::pi1, g, p, b);
  const auto expect = build_observable(Observable::T1, p, x0, b) +
                      poly_operator(Poly2::variable(1) * 0.5, p, b) + identity(b);
  CHECK(interior_deviation(shifted - expect, b, 1) < 1e-14);
  CHECK(gauge_variant_from_name("L3c") == GaugeVariant::L3c);
  CHECK_THROWS_AS(gauge_variant_from_name("pi3"), UnknownName);
}

TEST_CASE("change of basis examples") {
  for (const auto& p : {kUnit, kOdd}) {
    const double k = p.hbar * p.m * p.omega_c();
    CHECK(std::abs(change_of_basis(0, 0.0, p) - std::pow(std::numbers::pi * k, -0.25)) < 1e-15);
    CHECK(std::abs(change_of_basis(1, 0.0, p)) == 0.0);
    const QuadResult r = line_integral(
        [&](double T1) { return std::norm(change_of_basis(0, T1, p)); },
        AxisSpec{Scheme::gauss_hermite, 40, 0.0, std::sqrt(k)});
    CHECK(std::abs(r.value - 1.0) < 1e-13);
  }
  CHECK(level_phase(0, kOdd) == cdouble(1.0));
  CHECK(level_phase(1, kUnit) == kI);
  CHECK(level_phase(1, kOdd) == -kI);
}

}
