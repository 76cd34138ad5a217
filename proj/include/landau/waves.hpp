#pragma once

#include <array>
#include <complex>
#include <functional>
#include <variant>

#include "landau/fockspace.hpp"
#include "landau/jet.hpp"
#include "landau/params.hpp"
#include "landau/polynomial.hpp"

namespace landau {

/// Degree bound used for wave-function prefactors and operator coefficients.
inline constexpr int kWaveMaxDegree = 24;

/// H_n(a1 u1 + a2 u2 + c) / sqrt(2^n n!).
struct HermiteFactor {
  int n = 0;
  double a1 = 0.0;
  double a2 = 0.0;
  double c = 0.0;
};

/// L^m_n(kappa |u|^2). The angular factor lives in the prefactor polynomial.
struct LaguerreFactor {
  int n = 0;
  int m = 0;
  double kappa = 0.0;
};

using SpecialFactor = std::variant<std::monostate, HermiteFactor, LaguerreFactor>;

/// prefactor(u) * exp(-gauss(u)) * exp(i phase(u) / hbar) * special(u), u = x - x0.
struct WaveForm {
  Point x0 = Point::Zero();
  CPoly2 prefactor = CPoly2::constant(1.0, kWaveMaxDegree);
  Poly2 gauss{kWaveMaxDegree};
  Poly2 phase{kWaveMaxDegree};
  double hbar = 1.0;
  SpecialFactor special;

  cdouble value(const Point& x) const;
  Eigen::Vector2cd gradient(const Point& x) const;
  CJet2 jet(const Point& x) const;

  /// Same state times exp(i extra(u) / hbar).
  WaveForm rephased(const Poly2& extra) const;
};

/// c(u) + sum_i b_i(u) d_i + sum_ij a_ij(u) d_i d_j with coefficients to the left.
struct DiffOpSpec {
  Point x0 = Point::Zero();
  CPoly2 c{kWaveMaxDegree};
  std::array<CPoly2, 2> b{CPoly2(kWaveMaxDegree), CPoly2(kWaveMaxDegree)};
  std::array<std::array<CPoly2, 2>, 2> a{{{CPoly2(kWaveMaxDegree), CPoly2(kWaveMaxDegree)},
                                          {CPoly2(kWaveMaxDegree), CPoly2(kWaveMaxDegree)}}};

  bool first_order() const;
  cdouble apply(const WaveForm& psi, const Point& x) const;
  /// Apply to a precomputed jet of the state at x.
  cdouble apply(const CJet2& j, const Point& x) const;

  static DiffOpSpec multiply(const CPoly2& f, const Point& x0);
  /// -i hbar d_i
  static DiffOpSpec derivative(int i, double hbar, const Point& x0);

  friend DiffOpSpec operator+(const DiffOpSpec& l, const DiffOpSpec& r);
  friend DiffOpSpec operator-(const DiffOpSpec& l, const DiffOpSpec& r);
  friend DiffOpSpec operator*(cdouble s, const DiffOpSpec& op);
  /// Left multiplication by a polynomial.
  friend DiffOpSpec operator*(const CPoly2& f, const DiffOpSpec& op);
};

/// Operator product l * r. Both factors must be first order.
DiffOpSpec compose(const DiffOpSpec& l, const DiffOpSpec& r);

/// <x|T1, E_n> in gauge g: Hermite-Gaussian in x2 about x02 - T1/(qB), plane wave in x1.
WaveForm psi_T1(const GaugeChoice& g, const PhysicalParams& p, double T1, int n);
cdouble psi_T1(const GaugeChoice& g, const PhysicalParams& p, double T1, int n, const Point& x);

/// <x|n+, n-> in gauge g (Laguerre form, radial index min(n+, n-)).
WaveForm psi_fock(const GaugeChoice& g, const PhysicalParams& p, int n_plus, int n_minus);
cdouble psi_fock(const GaugeChoice& g, const PhysicalParams& p, int n_plus, int n_minus,
                 const Point& x);

/// Position representation of a physical observable in gauge g.
/// H, T1, T2, M3, p1, p2, L3, x1, x2, xc1, xc2.
DiffOpSpec position_op(Observable o, const GaugeChoice& g, const PhysicalParams& p);
/// Canonical momenta -i hbar d_i and canonical angular momentum about x0.
DiffOpSpec position_op(GaugeVariant v, const GaugeChoice& g, const PhysicalParams& p);

/// exp(i q dphibar(u) / hbar) with u = x - x0.
cdouble gauge_phase(const Poly2& dphibar, double q, double hbar, const Point& x0,
                    const Point& x);

/// -i hbar (d_i + (i/hbar) d_i Lambda) applied to psi at x.
cdouble flat_connection_rep(const Poly2& Lambda, const WaveForm& psi, int i, const Point& x);
/// The operator above as a DiffOpSpec.
DiffOpSpec flat_connection_op(const Poly2& Lambda, int i, double hbar, const Point& x0);
/// Replace every d_i in op by d_i + (i/hbar) d_i Lambda.
DiffOpSpec with_connection(const DiffOpSpec& op, const Poly2& Lambda, double hbar);

/// A function of T1 with its first two derivatives.
using T1Function = std::function<std::array<cdouble, 3>(double)>;

/// <T1 | n+> = conj(change_of_basis(n+, T1)) with analytic derivatives.
T1Function hermite_state(int n_plus, const PhysicalParams& p);

/// Table 1 kernels acting on f within level n: T1 f, i s hbar m w f', and
/// -1/2 s hbar^2 m w f'' + s hbar (T1^2 / (2 hbar m w) - (n + 1/2)) f.
/// Throws UnknownName for anything but T1, T2, M3.
std::function<cdouble(double)> t1rep_apply(Observable o, T1Function f, int n,
                                           const PhysicalParams& p);

}  // namespace landau
