#include "landau/waves.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "landau/errors.hpp"
#include "landau/special.hpp"

namespace landau {

namespace {

constexpr cdouble kI{0.0, 1.0};

Eigen::Vector2d shifted(const Point& x, const Point& x0) { return x - x0; }

std::array<double, 2> arr(const Eigen::Vector2d& u) { return {u.x(), u.y()}; }

CPoly2 cvar(int i) { return CPoly2::variable(i, kWaveMaxDegree); }

CPoly2 complexify(const Poly2& f) { return f.cast<cdouble>().with_max_degree(kWaveMaxDegree); }

CJet2 special_jet(const SpecialFactor& sf, const Eigen::Vector2d& u) {
  return std::visit(
      [&u](const auto& f) -> CJet2 {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, std::monostate>) {
          return CJet2::constant(1.0);
        } else if constexpr (std::is_same_v<F, HermiteFactor>) {
          const Eigen::Vector2d a(f.a1, f.a2);
          const auto d = normalized_hermite_derivatives(f.n, a.dot(u) + f.c);
          CJet2 j;
          j.value = d[0];
          j.grad = (d[1] * a).template cast<cdouble>();
          j.hess = (d[2] * a * a.transpose()).template cast<cdouble>();
          return j;
        } else {
          const auto d = laguerre_derivatives(f.n, f.m, f.kappa * u.squaredNorm());
          CJet2 j;
          j.value = d[0];
          j.grad = (2.0 * f.kappa * d[1] * u).template cast<cdouble>();
          j.hess = (4.0 * f.kappa * f.kappa * d[2] * u * u.transpose() +
                    2.0 * f.kappa * d[1] * Eigen::Matrix2d::Identity())
                       .template cast<cdouble>();
          return j;
        }
      },
      sf);
}

double special_value(const SpecialFactor& sf, const Eigen::Vector2d& u) {
  return std::visit(
      [&u](const auto& f) -> double {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, std::monostate>) {
          return 1.0;
        } else if constexpr (std::is_same_v<F, HermiteFactor>) {
          return normalized_hermite(f.n, f.a1 * u.x() + f.a2 * u.y() + f.c);
        } else {
          return laguerre(f.n, f.m, f.kappa * u.squaredNorm());
        }
      },
      sf);
}

void require_same_origin(const Point& a, const Point& b) {
  if (a != b) throw OriginMismatch();
}

}  // namespace

cdouble WaveForm::value(const Point& x) const {
  const Eigen::Vector2d u = shifted(x, x0);
  const auto ua = arr(u);
  const cdouble expo(-gauss(ua), phase(ua) / hbar);
  return prefactor(ua) * std::exp(expo) * special_value(special, u);
}

Eigen::Vector2cd WaveForm::gradient(const Point& x) const { return jet(x).grad; }

CJet2 WaveForm::jet(const Point& x) const {
  const Eigen::Vector2d u = shifted(x, x0);
  const Jet2<double> q = landau::jet(gauss, u);
  const Jet2<double> ph = landau::jet(phase, u);
  CJet2 expo = q.cast<cdouble>() * cdouble(-1.0) + ph.cast<cdouble>() * (kI / hbar);
  CJet2 out = landau::jet(prefactor, u);
  out *= exp(expo);
  if (!std::holds_alternative<std::monostate>(special)) out *= special_jet(special, u);
  return out;
}

WaveForm WaveForm::rephased(const Poly2& extra) const {
  WaveForm out = *this;
  out.phase = (phase + extra).with_max_degree(std::max(kWaveMaxDegree, extra.max_degree()));
  return out;
}

bool DiffOpSpec::first_order() const {
  for (const auto& row : a)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

cdouble DiffOpSpec::apply(const WaveForm& psi, const Point& x) const {
  return apply(psi.jet(x), x);
}

cdouble DiffOpSpec::apply(const CJet2& j, const Point& x) const {
  const auto u = arr(shifted(x, x0));
  cdouble out = c(u) * j.value;
  for (int i = 0; i < 2; ++i) {
    if (!b[i].is_zero()) out += b[i](u) * j.grad[i];
    for (int k = 0; k < 2; ++k)
      if (!a[i][k].is_zero()) out += a[i][k](u) * j.hess(i, k);
  }
  return out;
}

DiffOpSpec DiffOpSpec::multiply(const CPoly2& f, const Point& x0) {
  DiffOpSpec op;
  op.x0 = x0;
  op.c = f.with_max_degree(std::max(kWaveMaxDegree, f.max_degree()));
  return op;
}

DiffOpSpec DiffOpSpec::derivative(int i, double hbar, const Point& x0) {
  DiffOpSpec op;
  op.x0 = x0;
  op.b[i] = CPoly2::constant(-kI * hbar, kWaveMaxDegree);
  return op;
}

DiffOpSpec operator+(const DiffOpSpec& l, const DiffOpSpec& r) {
  require_same_origin(l.x0, r.x0);
  DiffOpSpec out = l;
  out.c += r.c;
  for (int i = 0; i < 2; ++i) {
    out.b[i] += r.b[i];
    for (int k = 0; k < 2; ++k) out.a[i][k] += r.a[i][k];
  }
  return out;
}

DiffOpSpec operator*(cdouble s, const DiffOpSpec& op) {
  DiffOpSpec out = op;
  out.c *= s;
  for (int i = 0; i < 2; ++i) {
    out.b[i] *= s;
    for (int k = 0; k < 2; ++k) out.a[i][k] *= s;
  }
  return out;
}

DiffOpSpec operator-(const DiffOpSpec& l, const DiffOpSpec& r) { return l + cdouble(-1.0) * r; }

DiffOpSpec operator*(const CPoly2& f, const DiffOpSpec& op) {
  DiffOpSpec out = op;
  out.c = f * op.c;
  for (int i = 0; i < 2; ++i) {
    out.b[i] = f * op.b[i];
    for (int k = 0; k < 2; ++k) out.a[i][k] = f * op.a[i][k];
  }
  return out;
}

DiffOpSpec compose(const DiffOpSpec& l, const DiffOpSpec& r) {
  if (!l.first_order() || !r.first_order())
    throw std::invalid_argument("compose needs two first-order operators");
  require_same_origin(l.x0, r.x0);
  DiffOpSpec out;
  out.x0 = l.x0;
  out.c = l.c * r.c;
  for (int i = 0; i < 2; ++i) out.c += l.b[i] * r.c.derivative(i);
  for (int k = 0; k < 2; ++k) {
    out.b[k] = l.c * r.b[k] + l.b[k] * r.c;
    for (int i = 0; i < 2; ++i) out.b[k] += l.b[i] * r.b[k].derivative(i);
  }
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) out.a[i][k] = l.b[i] * r.b[k];
  return out;
}

WaveForm psi_T1(const GaugeChoice& g, const PhysicalParams& p, double T1, int n) {
  p.validate();
  if (n < 0) throw std::invalid_argument("level must be >= 0");
  const double qB = p.qB();
  const double lam = p.lambda();
  const double shift = T1 / qB;

  WaveForm w;
  w.x0 = g.x0;
  w.hbar = p.hbar;
  w.prefactor = CPoly2::constant(std::pow(p.m * p.omega_c() / (std::numbers::pi * p.hbar), 0.25) /
                                     std::sqrt(2.0 * std::numbers::pi * p.hbar),
                                 kWaveMaxDegree);
  // (m w / 2 hbar) (u2 + T1/qB)^2
  const double a = 0.5 * p.m * p.omega_c() / p.hbar;
  w.gauss.add_term({0, 2}, a);
  w.gauss.add_term({0, 1}, 2.0 * a * shift);
  w.gauss.add_term({0, 0}, a * shift * shift);
  w.phase.add_term({1, 1}, 0.5 * (1.0 - g.alpha) * qB);
  w.phase.add_term({1, 0}, T1);
  w.phase += (g.phi * p.q).with_max_degree(kWaveMaxDegree);
  w.special = HermiteFactor{n, 0.0, 1.0 / lam, shift / lam};
  return w;
}

cdouble psi_T1(const GaugeChoice& g, const PhysicalParams& p, double T1, int n,
               const Point& x) {
  return psi_T1(g, p, T1, n).value(x);
}

WaveForm psi_fock(const GaugeChoice& g, const PhysicalParams& p, int n_plus, int n_minus) {
  p.validate();
  if (n_plus < 0 || n_minus < 0) throw std::invalid_argument("occupations must be >= 0");
  const int n = std::min(n_plus, n_minus);
  const int ell = n_plus - n_minus;
  const int al = std::abs(ell);
  const double lam = p.lambda();

  // sqrt(n! / (n + |l|)!)
  double ratio = 1.0;
  for (int k = n + 1; k <= n + al; ++k) ratio /= std::sqrt(static_cast<double>(k));
  const double norm = std::sqrt(p.m * p.omega_c() / (2.0 * std::numbers::pi * p.hbar)) *
                      (n % 2 == 0 ? 1.0 : -1.0) * ratio;

  // v^|l| e^{i s l theta} = ((u1 + i sigma u2) / (sqrt 2 lambda))^|l|
  const double sigma = ell >= 0 ? p.s() : -p.s();
  const CPoly2 z = (cvar(0) + (kI * sigma) * cvar(1)) * cdouble(1.0 / (std::sqrt(2.0) * lam));
  CPoly2 pre = CPoly2::constant(norm, kWaveMaxDegree);
  for (int k = 0; k < al; ++k) pre *= z;

  WaveForm w;
  w.x0 = g.x0;
  w.hbar = p.hbar;
  w.prefactor = pre;
  w.gauss.add_term({2, 0}, 0.25 / (lam * lam));
  w.gauss.add_term({0, 2}, 0.25 / (lam * lam));
  w.phase = (g.total_gauge_function(p.B) * p.q).with_max_degree(kWaveMaxDegree);
  w.special = LaguerreFactor{n, al, 0.5 / (lam * lam)};
  return w;
}

cdouble psi_fock(const GaugeChoice& g, const PhysicalParams& p, int n_plus, int n_minus,
                 const Point& x) {
  return psi_fock(g, p, n_plus, n_minus).value(x);
}

DiffOpSpec position_op(Observable o, const GaugeChoice& g, const PhysicalParams& p) {
  p.validate();
  const Point& x0 = g.x0;
  const double qB = p.qB();
  const auto A = vector_potential_poly(g, p.B);
  auto velocity = [&](int i) {
    return DiffOpSpec::derivative(i, p.hbar, x0) -
           DiffOpSpec::multiply(complexify(A[i] * p.q), x0);
  };
  auto mult = [&](const CPoly2& f) { return DiffOpSpec::multiply(f, x0); };
  const CPoly2 u1 = cvar(0);
  const CPoly2 u2 = cvar(1);

  switch (o) {
    case Observable::p1: return velocity(0);
    case Observable::p2: return velocity(1);
    case Observable::T1: return velocity(0) - mult(u2 * cdouble(qB));
    case Observable::T2: return velocity(1) + mult(u1 * cdouble(qB));
    case Observable::H:
      return cdouble(0.5 / p.m) *
             (compose(velocity(0), velocity(0)) + compose(velocity(1), velocity(1)));
    case Observable::L3: return u1 * velocity(1) - u2 * velocity(0);
    case Observable::M3:
      return u1 * velocity(1) - u2 * velocity(0) + mult((u1 * u1 + u2 * u2) * cdouble(0.5 * qB));
    case Observable::x1: return mult(u1 + CPoly2::constant(x0.x(), kWaveMaxDegree));
    case Observable::x2: return mult(u2 + CPoly2::constant(x0.y(), kWaveMaxDegree));
    case Observable::xc1:
      return mult(CPoly2::constant(x0.x(), kWaveMaxDegree)) +
             cdouble(1.0 / qB) * position_op(Observable::T2, g, p);
    case Observable::xc2:
      return mult(CPoly2::constant(x0.y(), kWaveMaxDegree)) -
             cdouble(1.0 / qB) * position_op(Observable::T1, g, p);
  }
  throw UnknownName("observable");
}

DiffOpSpec position_op(GaugeVariant v, const GaugeChoice& g, const PhysicalParams& p) {
  p.validate();
  const Point& x0 = g.x0;
  const DiffOpSpec pi1 = DiffOpSpec::derivative(0, p.hbar, x0);
  const DiffOpSpec pi2 = DiffOpSpec::derivative(1, p.hbar, x0);
  switch (v) {
    case GaugeVariant::pi1: return pi1;
    case GaugeVariant::pi2: return pi2;
    case GaugeVariant::L3c: return cvar(0) * pi2 - cvar(1) * pi1;
  }
  throw UnknownName("gauge variant");
}

cdouble gauge_phase(const Poly2& dphibar, double q, double hbar, const Point& x0,
                    const Point& x) {
  return std::polar(1.0, q * eval_at(dphibar, x0, x) / hbar);
}

DiffOpSpec flat_connection_op(const Poly2& Lambda, int i, double hbar, const Point& x0) {
  return DiffOpSpec::derivative(i, hbar, x0) +
         DiffOpSpec::multiply(complexify(Lambda.derivative(i)), x0);
}

cdouble flat_connection_rep(const Poly2& Lambda, const WaveForm& psi, int i, const Point& x) {
  return flat_connection_op(Lambda, i, psi.hbar, psi.x0).apply(psi, x);
}

DiffOpSpec with_connection(const DiffOpSpec& op, const Poly2& Lambda, double hbar) {
  const cdouble ih = kI / hbar;
  const std::array<CPoly2, 2> V{complexify(Lambda.derivative(0)),
                                complexify(Lambda.derivative(1))};
  DiffOpSpec out = op;
  for (int i = 0; i < 2; ++i) {
    out.c += op.b[i] * V[i] * ih;
    for (int j = 0; j < 2; ++j) {
      if (op.a[i][j].is_zero()) continue;
      out.c += op.a[i][j] * (V[j].derivative(i) * ih - V[i] * V[j] * cdouble(1.0 / (hbar * hbar)));
      out.b[i] += op.a[i][j] * V[j] * ih;
      out.b[j] += op.a[i][j] * V[i] * ih;
    }
  }
  return out;
}

T1Function hermite_state(int n_plus, const PhysicalParams& p) {
  p.validate();
  if (n_plus < 0) throw std::invalid_argument("n+ must be >= 0");
  const double k = p.hbar * p.m * p.omega_c();
  const double rk = std::sqrt(k);
  const double norm = std::pow(std::numbers::pi * k, -0.25);
  const cdouble ph = std::conj(std::pow(kI, n_plus));
  return [=](double T1) -> std::array<cdouble, 3> {
    const double t = T1 / rk;
    const auto h = normalized_hermite_derivatives(n_plus, t);
    const double e = norm * std::exp(-0.5 * t * t);
    const double g0 = e * h[0];
    const double g1 = e * (h[1] - t * h[0]) / rk;
    const double g2 = e * (h[2] - 2.0 * t * h[1] + (t * t - 1.0) * h[0]) / k;
    return {ph * g0, ph * g1, ph * g2};
  };
}

std::function<cdouble(double)> t1rep_apply(Observable o, T1Function f, int n,
                                           const PhysicalParams& p) {
  p.validate();
  const double hbar = p.hbar;
  const double k = hbar * p.m * p.omega_c();
  const double s = p.s();
  switch (o) {
    case Observable::T1:
      return [f](double T1) { return T1 * f(T1)[0]; };
    case Observable::T2:
      return [f, s, k](double T1) { return kI * s * k * f(T1)[1]; };
    case Observable::M3:
      return [f, s, k, hbar, n](double T1) {
        const auto v = f(T1);
        return -0.5 * s * hbar * k * v[2] +
               s * hbar * (T1 * T1 / (2.0 * k) - (n + 0.5)) * v[0];
      };
    default:
      throw UnknownName(std::string(name_of(o)));
  }
}

}  // namespace landau
