#include <cmath>
#include <numbers>

#include "landau/campaigns.hpp"

namespace landau {

namespace {

constexpr int kMaxNPlus = 8;
constexpr int kMaxNMinus = 2;
constexpr int kMaxOrtho = 10;
constexpr std::array<double, 4> kT1Samples{-1.1, 0.0, 0.6, 1.7};
constexpr std::array<std::array<int, 2>, 5> kReconstruct{{{0, 0}, {2, 1}, {1, 3}, {4, 2}, {0, 4}}};

}  // namespace

VerificationReport run_basis_change(const CampaignConfig& cfg) {
  const PhysicalParams& p = cfg.params;
  p.validate();
  const RunSettings& st = cfg.settings;
  const GaugeChoice& g = cfg.gauge;
  VerificationReport rep("basis-change", p, {g}, st);
  const double k = p.hbar * p.m * p.omega_c();
  const double rk = std::sqrt(k);
  // Simpson needs an odd count; match the 2-D grids, which round up.
  const int nodes = st.scheme == Scheme::simpson && st.grid % 2 == 0 ? st.grid + 1 : st.grid;

  // <n+, n-|T1, E_n-> by 2-D quadrature against the closed form.
  double overlap = 0.0;
  for (double t : kT1Samples) {
    const double T1 = t * rk;
    const Grid2 og = overlap_grid(p, g.x0, T1, st.grid, st.scheme);
    for (int nm = 0; nm <= kMaxNMinus; ++nm) {
      const Field t1 = sample(psi_T1(g, p, T1, nm), og);
      for (int np = 0; np <= kMaxNPlus; ++np) {
        const cdouble q = integrate_product(sample(psi_fock(g, p, np, nm), og), t1, og);
        overlap = std::max(overlap, std::abs(q - level_phase(nm, p) * change_of_basis(np, T1, p)));
      }
    }
  }
  rep.check("change.overlap", overlap, cfg.tol.quadrature);

  // Orthonormality of the closed-form family over T1.
  double ortho = 0.0;
  const AxisSpec t1axis{st.scheme, nodes, 0.0, st.scheme == Scheme::gauss_hermite ? rk : 12.0 * rk};
  for (int a = 0; a <= kMaxOrtho; ++a) {
    for (int b = a; b <= kMaxOrtho; ++b) {
      const QuadResult r = line_integral(
          [&](double T1) { return change_of_basis(a, T1, p) * std::conj(change_of_basis(b, T1, p)); },
          t1axis);
      ortho = std::max(ortho, std::abs(r.value - (a == b ? 1.0 : 0.0)));
    }
  }
  rep.check("change.orthonormality", ortho, cfg.tol.quadrature);

  // <x|n+, n-> = int dT1 <x|T1, E_n-> <T1, E_n-|n+, n->.
  std::mt19937_64 rng(st.seed);
  double recon = 0.0;
  const double lam = p.lambda();
  for (int i = 0; i < 20; ++i) {
    const double r = 2.5 * lam * std::sqrt(uniform(rng, 0.0, 1.0));
    const double th = uniform(rng, -std::numbers::pi, std::numbers::pi);
    const Point x = g.x0 + r * Point(std::cos(th), std::sin(th));
    const double u2 = x.y() - g.x0.y();
    for (const auto& [np, nm] : kReconstruct) {
      const WaveForm fock = psi_fock(g, p, np, nm);
      const cdouble ph = level_phase(nm, p);
      const AxisSpec axis{st.scheme, nodes, -0.5 * p.qB() * u2,
                          st.scheme == Scheme::gauss_hermite ? rk : 12.0 * rk};
      const QuadResult v = line_integral(
          [&](double T1) { return psi_T1(g, p, T1, nm, x) * std::conj(ph * change_of_basis(np, T1, p)); },
          axis);
      recon = std::max(recon, std::abs(v.value - fock.value(x)));
    }
  }
  rep.check("change.reconstruction", recon, cfg.tol.reconstruction);
  return rep;
}

}  // namespace landau
