#include <algorithm>
#include <cmath>
#include <map>

#include "landau/campaigns.hpp"
#include "landau/errors.hpp"

namespace landau {

namespace {

constexpr std::array<Observable, 7> kPhysical{Observable::H,  Observable::T1, Observable::T2,
                                              Observable::M3, Observable::p1, Observable::p2,
                                              Observable::L3};
// The k/2 rule behind the refinement estimate must still resolve the tails of
// the n = |l| = 4 states; 80 nodes leave the coarse rule just short.
constexpr int kMinNodes = 96;
constexpr std::array<GaugeVariant, 3> kVariants{GaugeVariant::pi1, GaugeVariant::pi2,
                                                GaugeVariant::L3c};

std::vector<AngularLabel> scan_states(int max_n, int max_l) {
  std::vector<AngularLabel> out;
  for (int n = 0; n <= max_n; ++n)
    for (int l = std::max(-n, -max_l); l <= max_l; ++l) out.push_back({l, n});
  return out;
}

// Quadrature matrices <a|O|b> of several operators over one state set.
struct QuadMatrices {
  std::vector<Eigen::MatrixXcd> fine;
  std::vector<Eigen::MatrixXcd> coarse;
};

QuadMatrices quadrature_matrices(const std::vector<WaveForm>& states,
                                 const std::vector<DiffOpSpec>& ops, const Grid2& grid) {
  QuadMatrices out;
  const Eigen::Index n = static_cast<Eigen::Index>(states.size());
  for (int pass = 0; pass < 2; ++pass) {
    const Grid2 g = pass == 0 ? grid : grid.coarse();
    std::vector<JetField> jets;
    std::vector<Field> vals;
    for (const auto& s : states) {
      jets.push_back(sample_jets(s, g));
      vals.push_back(values(jets.back()));
    }
    auto& dst = pass == 0 ? out.fine : out.coarse;
    for (const auto& op : ops) {
      const OpField of = sample_op(op, g);
      Eigen::MatrixXcd m(n, n);
      for (Eigen::Index b = 0; b < n; ++b) {
        const Field ob = applied(of, jets[b]);
        for (Eigen::Index a = 0; a < n; ++a) m(a, b) = integrate_product(vals[a], ob, g);
      }
      dst.push_back(std::move(m));
    }
  }
  return out;
}

Eigen::MatrixXcd fock_block(const FockOperator& op, const FockBasis& basis,
                            const std::vector<AngularLabel>& states) {
  const Eigen::Index n = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const FockLabel fa = to_fock(states[a]);
    for (Eigen::Index b = 0; b < n; ++b) {
      const FockLabel fb = to_fock(states[b]);
      m(a, b) = op.matrix(basis.index(fa.n_plus, fa.n_minus), basis.index(fb.n_plus, fb.n_minus));
    }
  }
  return m;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// u1 d2 f - u2 d1 f
Poly2 angular_derivative(const Poly2& f) {
  return Poly2::variable(0) * f.derivative(1) - Poly2::variable(1) * f.derivative(0);
}

}  // namespace

VerificationReport run_gauge_scan(const CampaignConfig& cfg,
                                  const std::vector<GaugeChoice>& gauges) {
  const PhysicalParams& p = cfg.params;
  p.validate();
  if (gauges.empty()) throw std::invalid_argument("gauge scan needs at least one gauge");
  for (const auto& g : gauges)
    if (g.x0 != gauges.front().x0) throw OriginMismatch();
  RunSettings st = cfg.settings;
  st.grid = std::max(st.grid, kMinNodes);
  VerificationReport rep("gauge-scan", p, gauges, st);
  const double tol = cfg.tol.quadrature;
  const Point x0 = gauges.front().x0;

  const std::vector<AngularLabel> states = scan_states(4, 4);
  int max_phi = 2;
  for (const auto& g : gauges) max_phi = std::max(max_phi, g.phi.degree());
  int top = 0;
  for (const auto& s : states) top = std::max(top, to_fock(s).n_plus);
  const FockBasis basis(std::max(st.nmax, top + max_phi + 1));
  const Grid2 grid = default_grid(p, x0, st.grid, st.scheme);

  std::vector<Eigen::MatrixXcd> closed;
  for (Observable o : kPhysical)
    closed.push_back(fock_block(build_observable(o, p, x0, basis), basis, states));

  std::vector<QuadMatrices> quad;
  std::vector<std::vector<Eigen::MatrixXcd>> decomposition;
  double covariance = 0.0;
  std::mt19937_64 rng(st.seed);
  std::vector<Point> probes;
  for (int i = 0; i < 50; ++i)
    probes.emplace_back(x0 + p.lambda() * Point(uniform(rng, -3, 3), uniform(rng, -3, 3)));

  for (const auto& g : gauges) {
    std::vector<WaveForm> wfs;
    for (const auto& s : states) {
      const FockLabel f = to_fock(s);
      wfs.push_back(psi_fock(g, p, f.n_plus, f.n_minus));
    }
    std::vector<DiffOpSpec> ops;
    for (Observable o : kPhysical) ops.push_back(position_op(o, g, p));
    for (GaugeVariant v : kVariants) ops.push_back(position_op(v, g, p));
    quad.push_back(quadrature_matrices(wfs, ops, grid));

    std::vector<Eigen::MatrixXcd> dec;
    for (GaugeVariant v : kVariants)
      dec.push_back(fock_block(gauge_variant_matrix(v, g, p, basis), basis, states));
    decomposition.push_back(std::move(dec));

    // Wave functions pick up exactly the gauge phase of the gauge-function change.
    const Poly2 delta = gauge_delta(gauges.front(), g, p.B);
    for (const auto& s : states) {
      const FockLabel f = to_fock(s);
      const WaveForm ref = psi_fock(gauges.front(), p, f.n_plus, f.n_minus);
      const WaveForm cur = psi_fock(g, p, f.n_plus, f.n_minus);
      for (const auto& x : probes)
        covariance = std::max(covariance, std::abs(cur.value(x) - gauge_phase(delta, p.q, p.hbar, x0, x) * ref.value(x)));
    }
  }
  rep.check("covariance.psi_fock", covariance, cfg.tol.algebraic);

  for (std::size_t k = 0; k < kPhysical.size(); ++k) {
    const std::string name(name_of(kPhysical[k]));
    double spread = 0.0;
    double vs_closed = 0.0;
    double refine = 0.0;
    for (std::size_t a = 0; a < gauges.size(); ++a) {
      vs_closed = std::max(vs_closed, max_abs(quad[a].fine[k] - closed[k]));
      refine = std::max(refine, max_abs(quad[a].fine[k] - quad[a].coarse[k]));
      for (std::size_t b = a + 1; b < gauges.size(); ++b)
        spread = std::max(spread, max_abs(quad[a].fine[k] - quad[b].fine[k]));
    }
    rep.check("invariance." + name, spread, tol);
    rep.check("closed_form." + name, vs_closed, tol);
    rep.check("refinement." + name, refine, tol);
  }

  for (std::size_t v = 0; v < kVariants.size(); ++v) {
    const std::string name(name_of(kVariants[v]));
    const std::size_t k = kPhysical.size() + v;
    double dec = 0.0;
    for (std::size_t a = 0; a < gauges.size(); ++a)
      dec = std::max(dec, max_abs(quad[a].fine[k] - decomposition[a][v]));
    rep.check("decomposition." + name, dec, tol);

    for (std::size_t a = 1; a < gauges.size(); ++a) {
      const Poly2 qdelta = gauge_delta(gauges.front(), gauges[a], p.B) * p.q;
      const Poly2 shift = kVariants[v] == GaugeVariant::pi1   ? qdelta.derivative(0)
                          : kVariants[v] == GaugeVariant::pi2 ? qdelta.derivative(1)
                                                              : angular_derivative(qdelta);
      const Eigen::MatrixXcd predicted = fock_block(poly_operator(shift, p, basis), basis, states);
      const Eigen::MatrixXcd observed = quad[a].fine[k] - quad[0].fine[k];
      const std::string tag = name + ".g" + std::to_string(a);
      rep.check("shift." + tag, max_abs(observed - predicted), tol);
      if (!shift.is_zero()) rep.check_exceeds("differ." + tag, max_abs(observed), 100.0 * tol);
    }
  }
  return rep;
}

}  // namespace landau
