#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "landau/campaigns.hpp"
#include "landau/errors.hpp"

namespace landau {

namespace {

constexpr cdouble kI{0.0, 1.0};

double eps(int i, int j) { return i == j ? 0.0 : (i == 0 ? 1.0 : -1.0); }

// Max |m| over the interior, without the excursion guard; NaN if the interior is empty.
double raw_interior(const Eigen::MatrixXcd& m, const FockBasis& b, int margin) {
  if (margin < 0 || margin > b.nmax()) return std::numeric_limits<double>::quiet_NaN();
  const Eigen::MatrixXcd r = interior_project(m, b, margin);
  return r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff();
}

}  // namespace

VerificationReport run_verify_algebra(const CampaignConfig& cfg) {
  const PhysicalParams& p = cfg.params;
  p.validate();
  const RunSettings& st = cfg.settings;
  VerificationReport rep("verify-algebra", p, {cfg.gauge}, st);
  const double tol = cfg.tol.algebraic;

  const FockBasis basis(st.nmax);
  const Point& x0 = cfg.gauge.x0;
  std::map<Observable, FockOperator> ops;
  try {
    for (Observable o : {Observable::H, Observable::T1, Observable::T2, Observable::M3,
                         Observable::p1, Observable::p2, Observable::L3, Observable::xc1,
                         Observable::xc2, Observable::x1, Observable::x2})
      ops.emplace(o, build_observable(o, p, x0, basis));
  } catch (const TruncationError&) {
    rep.fail("basis.ladder", std::numeric_limits<double>::quiet_NaN(), tol);
    return rep;
  }
  auto op = [&](Observable o) -> const FockOperator& { return ops.at(o); };
  const FockOperator id = identity(basis);
  const FockOperator zero{Eigen::MatrixXcd::Zero(basis.dim(), basis.dim()), 0};
  const double hbar = p.hbar;
  const double qB = p.qB();
  const double s = p.s();
  const double w = p.omega_c();
  const std::array<Observable, 2> X{Observable::x1, Observable::x2};
  const std::array<Observable, 2> P{Observable::p1, Observable::p2};
  const std::array<Observable, 2> T{Observable::T1, Observable::T2};
  const std::array<Observable, 2> XC{Observable::xc1, Observable::xc2};
  std::array<FockOperator, 2> U{op(Observable::x1) - x0.x() * id, op(Observable::x2) - x0.y() * id};

  auto comm = [&](const std::string& id_, const FockOperator& a, const FockOperator& b,
                  const FockOperator& expected) {
    try {
      rep.check(id_, commutator_check(a, b, expected, basis, st.margin), tol);
    } catch (const TruncationError&) {
      rep.fail(id_, raw_interior(commutator(a, b).matrix - expected.matrix, basis, st.margin), tol);
    }
  };
  auto nm = [](Observable o) { return std::string(name_of(o)); };

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      comm("comm[" + nm(X[i]) + "," + nm(P[j]) + "]", op(X[i]), op(P[j]),
           (i == j ? kI * hbar : cdouble(0.0)) * id);
  comm("comm[p1,p2]", op(Observable::p1), op(Observable::p2), (kI * hbar * qB) * id);
  for (int i = 0; i < 2; ++i) comm("comm[" + nm(T[i]) + ",H]", op(T[i]), op(Observable::H), zero);
  comm("comm[M3,H]", op(Observable::M3), op(Observable::H), zero);
  comm("comm[T1,T2]", op(Observable::T1), op(Observable::T2), (-kI * hbar * qB) * id);
  for (int i = 0; i < 2; ++i)
    comm("comm[" + nm(T[i]) + ",M3]", op(T[i]), op(Observable::M3),
         (-kI * hbar * eps(i, 1 - i)) * op(T[1 - i]));
  comm("comm[xc1,xc2]", op(Observable::xc1), op(Observable::xc2), (-kI * hbar / qB) * id);
  for (int i = 0; i < 2; ++i) comm("comm[" + nm(XC[i]) + ",H]", op(XC[i]), op(Observable::H), zero);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      comm("comm[" + nm(XC[i]) + "," + nm(P[j]) + "]", op(XC[i]), op(P[j]), zero);
  for (int i = 0; i < 2; ++i)
    comm("comm[" + nm(P[i]) + ",H]", op(P[i]), op(Observable::H),
         (kI * s * hbar * w * eps(i, 1 - i)) * op(P[1 - i]));
  comm("comm[L3,M3]", op(Observable::L3), op(Observable::M3), zero);
  {
    FockOperator sym = zero;
    for (int i = 0; i < 2; ++i) sym = sym + U[i] * op(P[i]) + op(P[i]) * U[i];
    comm("comm[L3,H]", op(Observable::L3), op(Observable::H), (-0.5 * kI * hbar * s * w) * sym);
  }
  for (int i = 0; i < 2; ++i)
    comm("comm[" + nm(T[i]) + ",L3]", op(T[i]), op(Observable::L3),
         (-kI * hbar * eps(i, 1 - i)) * op(P[1 - i]));
  for (int i = 0; i < 2; ++i)
    comm("comm[" + nm(P[i]) + ",L3]", op(P[i]), op(Observable::L3),
         (kI * hbar * eps(i, 1 - i)) * op(T[1 - i]) -
             (2.0 * kI * hbar * eps(i, 1 - i)) * op(P[1 - i]));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      comm("comm[" + nm(X[i]) + "," + nm(T[j]) + "]", op(X[i]), op(T[j]),
           (i == j ? kI * hbar : cdouble(0.0)) * id);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      comm("comm[" + nm(P[i]) + "," + nm(T[j]) + "]", op(P[i]), op(T[j]), zero);
  for (int i = 0; i < 2; ++i)
    comm("comm[u" + std::to_string(i + 1) + ",M3]", U[i], op(Observable::M3),
         (-kI * hbar * eps(i, 1 - i)) * U[1 - i]);
  for (int i = 0; i < 2; ++i)
    comm("comm[" + nm(P[i]) + ",M3]", op(P[i]), op(Observable::M3),
         (-kI * hbar * eps(i, 1 - i)) * op(P[1 - i]));

  {
    const FockOperator rel = op(Observable::T1) * op(Observable::T1) +
                             op(Observable::T2) * op(Observable::T2) -
                             (2.0 * p.m) * op(Observable::H) - (2.0 * qB) * op(Observable::M3);
    try {
      rep.check("relation.quantum", interior_deviation(rel, basis, st.margin), tol);
    } catch (const TruncationError&) {
      rep.fail("relation.quantum", raw_interior(rel.matrix, basis, st.margin), tol);
    }
  }

  for (const auto& [o, m] : ops)
    rep.check("hermitian." + nm(o), (m.matrix - m.matrix.adjoint()).cwiseAbs().maxCoeff(), 0.0);

  {
    const Eigen::MatrixXcd& H = op(Observable::H).matrix;
    double diag = 0.0;
    double degeneracy = 0.0;
    for (Eigen::Index i = 0; i < basis.dim(); ++i) {
      const auto [np, nmn] = basis.occupation(i);
      diag = std::max(diag, std::abs(H(i, i) - cdouble(hbar * w * (nmn + 0.5))));
      degeneracy = std::max(degeneracy, std::abs(H(i, i) - H(basis.index(0, nmn), basis.index(0, nmn))));
    }
    const double off = (H - Eigen::MatrixXcd(H.diagonal().asDiagonal())).cwiseAbs().maxCoeff();
    rep.check("spectrum.diagonal", diag, 0.0);
    rep.check("spectrum.offdiagonal", off, 0.0);
    rep.check("spectrum.degeneracy", degeneracy, 0.0);
  }
  return rep;
}

}  // namespace landau
