#include "landau/fockspace.hpp"

#include <Eigen/SparseCore>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "landau/errors.hpp"
#include "landau/special.hpp"

namespace landau {

namespace {

constexpr cdouble kI{0.0, 1.0};

cdouble i_power(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

Eigen::MatrixXcd sparse_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const Eigen::SparseMatrix<cdouble> sa = a.sparseView();
  const Eigen::SparseMatrix<cdouble> sb = b.sparseView();
  return Eigen::MatrixXcd(sa * sb);
}

double kron(int a, int b) { return a == b ? 1.0 : 0.0; }

double sqrt_nonneg(int n) { return n > 0 ? std::sqrt(static_cast<double>(n)) : 0.0; }

// Number operator of one sector as an exact diagonal.
FockOperator number_op(const FockBasis& b, bool plus_sector) {
  Eigen::VectorXcd diag(b.dim());
  for (Eigen::Index i = 0; i < b.dim(); ++i) {
    const auto [np, nm] = b.occupation(i);
    diag[i] = static_cast<double>(plus_sector ? np : nm);
  }
  return {diag.asDiagonal().toDenseMatrix(), 0};
}

struct PositionOps {
  FockOperator u1;
  FockOperator u2;
};

PositionOps position_ops(const PhysicalParams& p, const FockBasis& b) {
  const LadderOps l = ladder_ops(b);
  const double r2 = std::sqrt(2.0);
  const double lam = p.lambda();
  const cdouble is = kI * static_cast<double>(p.s());
  const FockOperator a1 = (1.0 / r2) * (l.a_plus + l.a_minus);
  const FockOperator a2 = (is / r2) * (l.a_plus - l.a_minus);
  return {lam * (a1 + a1.adjoint()), lam * (a2 + a2.adjoint())};
}

}  // namespace

FockBasis::FockBasis(int nmax) : nmax_(nmax) {
  if (nmax < 0) throw std::invalid_argument("nmax must be >= 0");
}

Eigen::Index FockBasis::index(int n_plus, int n_minus) const {
  if (n_plus < 0 || n_minus < 0 || n_plus > nmax_ || n_minus > nmax_)
    throw std::out_of_range("occupation outside truncated basis");
  return static_cast<Eigen::Index>(n_plus) * (nmax_ + 1) + n_minus;
}

std::pair<int, int> FockBasis::occupation(Eigen::Index i) const {
  if (i < 0 || i >= dim()) throw std::out_of_range("flat index outside basis");
  return {static_cast<int>(i / (nmax_ + 1)), static_cast<int>(i % (nmax_ + 1))};
}

bool FockBasis::interior(Eigen::Index i, int margin) const {
  const auto [np, nm] = occupation(i);
  return np <= nmax_ - margin && nm <= nmax_ - margin;
}

FockOperator identity(const FockBasis& b) {
  return {Eigen::MatrixXcd::Identity(b.dim(), b.dim()), 0};
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
  return {sparse_product(a.matrix, b.matrix), a.excursion + b.excursion};
}

FockOperator commutator(const FockOperator& a, const FockOperator& b) {
  return {sparse_product(a.matrix, b.matrix) - sparse_product(b.matrix, a.matrix),
          a.excursion + b.excursion};
}

FockLabel to_fock(const AngularLabel& a) {
  if (a.n < 0 || a.ell < -a.n) throw std::invalid_argument("angular label needs n >= 0, l >= -n");
  return {a.n + a.ell, a.n};
}

AngularLabel to_angular(const FockLabel& f) {
  if (f.n_plus < 0 || f.n_minus < 0) throw std::invalid_argument("occupations must be >= 0");
  return {f.n_plus - f.n_minus, f.n_minus};
}

LadderOps ladder_ops(const FockBasis& b) {
  if (b.nmax() < 1) throw TruncationError("ladder operators need nmax >= 1");
  const Eigen::Index d = b.dim();
  Eigen::MatrixXcd ap = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd am = Eigen::MatrixXcd::Zero(d, d);
  for (int np = 0; np <= b.nmax(); ++np) {
    for (int nm = 0; nm <= b.nmax(); ++nm) {
      const Eigen::Index col = b.index(np, nm);
      if (np > 0) ap(b.index(np - 1, nm), col) = std::sqrt(static_cast<double>(np));
      if (nm > 0) am(b.index(np, nm - 1), col) = std::sqrt(static_cast<double>(nm));
    }
  }
  return {{ap, 1}, {ap.adjoint(), 1}, {am, 1}, {am.adjoint(), 1}};
}

Observable observable_from_name(std::string_view name) {
  static constexpr std::pair<std::string_view, Observable> table[] = {
      {"H", Observable::H},     {"T1", Observable::T1},   {"T2", Observable::T2},
      {"M3", Observable::M3},   {"p1", Observable::p1},   {"p2", Observable::p2},
      {"L3", Observable::L3},   {"xc1", Observable::xc1}, {"xc2", Observable::xc2},
      {"x1", Observable::x1},   {"x2", Observable::x2}};
  for (const auto& [n, o] : table)
    if (n == name) return o;
  throw UnknownName(std::string(name));
}

std::string_view name_of(Observable o) {
  switch (o) {
    case Observable::H: return "H";
    case Observable::T1: return "T1";
    case Observable::T2: return "T2";
    case Observable::M3: return "M3";
    case Observable::p1: return "p1";
    case Observable::p2: return "p2";
    case Observable::L3: return "L3";
    case Observable::xc1: return "xc1";
    case Observable::xc2: return "xc2";
    case Observable::x1: return "x1";
    case Observable::x2: return "x2";
  }
  return "?";
}

FockOperator build_observable(Observable o, const PhysicalParams& p, const Point& x0,
                              const FockBasis& b) {
  p.validate();
  const LadderOps l = ladder_ops(b);
  const double hbar = p.hbar;
  const double w = p.omega_c();
  const double s = p.s();
  const double c = std::sqrt(hbar * p.m * w / 2.0);
  const FockOperator id = identity(b);

  switch (o) {
    case Observable::H:
      return hbar * w * (number_op(b, false) + 0.5 * id);
    case Observable::T1:
      return (kI * c) * (l.a_plus_dag - l.a_plus);
    case Observable::T2:
      return (s * c) * (l.a_plus_dag + l.a_plus);
    case Observable::M3:
      return (s * hbar) * (number_op(b, true) - number_op(b, false));
    case Observable::p1:
      return (kI * c) * (l.a_minus_dag - l.a_minus);
    case Observable::p2:
      return (-s * c) * (l.a_minus_dag + l.a_minus);
    case Observable::L3:
      return (-s * hbar) * (2.0 * number_op(b, false) + id + l.a_plus_dag * l.a_minus_dag +
                            l.a_plus * l.a_minus);
    case Observable::x1:
      return x0.x() * id + position_ops(p, b).u1;
    case Observable::x2:
      return x0.y() * id + position_ops(p, b).u2;
    case Observable::xc1:
      return x0.x() * id + (1.0 / p.qB()) * build_observable(Observable::T2, p, x0, b);
    case Observable::xc2:
      return x0.y() * id - (1.0 / p.qB()) * build_observable(Observable::T1, p, x0, b);
  }
  throw UnknownName("observable");
}

FockOperator poly_operator(const Poly2& f, const PhysicalParams& p, const FockBasis& b) {
  const int deg = f.degree();
  if (deg > b.nmax())
    throw TruncationError("polynomial degree " + std::to_string(deg) +
                          " exceeds truncation nmax " + std::to_string(b.nmax()));
  FockOperator out{Eigen::MatrixXcd::Zero(b.dim(), b.dim()), deg};
  if (f.is_zero()) return out;
  const PositionOps pos = position_ops(p, b);
  std::vector<Eigen::MatrixXcd> pw1{identity(b).matrix};
  std::vector<Eigen::MatrixXcd> pw2{identity(b).matrix};
  for (int k = 1; k <= deg; ++k) {
    pw1.push_back(sparse_product(pw1.back(), pos.u1.matrix));
    pw2.push_back(sparse_product(pw2.back(), pos.u2.matrix));
  }
  for (const auto& [e, coeff] : f.terms()) out.matrix += coeff * sparse_product(pw1[e[0]], pw2[e[1]]);
  return out;
}

Eigen::MatrixXcd interior_project(const Eigen::MatrixXcd& m, const FockBasis& b, int margin) {
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < b.dim(); ++i)
    if (b.interior(i, margin)) keep.push_back(i);
  Eigen::MatrixXcd out(keep.size(), keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c) out(r, c) = m(keep[r], keep[c]);
  return out;
}

double interior_deviation(const FockOperator& op, const FockBasis& b, int margin) {
  if (margin < op.excursion)
    throw TruncationError("margin " + std::to_string(margin) + " below operator excursion " +
                          std::to_string(op.excursion));
  if (margin > b.nmax()) throw TruncationError("interior subspace is empty");
  const Eigen::MatrixXcd m = interior_project(op.matrix, b, margin);
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double commutator_check(const FockOperator& a, const FockOperator& b,
                        const FockOperator& expected, const FockBasis& basis, int margin) {
  if (margin < a.excursion + b.excursion)
    throw TruncationError("margin " + std::to_string(margin) + " below combined excursion " +
                          std::to_string(a.excursion + b.excursion));
  if (margin > basis.nmax()) throw TruncationError("interior subspace is empty");
  const Eigen::MatrixXcd diff = commutator(a, b).matrix - expected.matrix;
  return interior_project(diff, basis, margin).cwiseAbs().maxCoeff();
}

TableElement table2_element(Observable o, int ell1, int n1, int ell2, int n2,
                            const PhysicalParams& p) {
  const FockLabel f1 = to_fock({ell1, n1});
  const FockLabel f2 = to_fock({ell2, n2});
  const double hbar = p.hbar;
  const double s = p.s();
  const double c = std::sqrt(hbar * p.m * p.omega_c() / 2.0);
  const double dn = kron(n1, n2);
  const double dl = kron(ell1, ell2);

  switch (o) {
    case Observable::H:
      return {hbar * p.omega_c() * (n1 + 0.5) * dl * dn};
    case Observable::T1:
      return {kI * c *
              (sqrt_nonneg(n1 + ell1) * kron(ell1, ell2 + 1) -
               sqrt_nonneg(n1 + ell2) * kron(ell2, ell1 + 1)) *
              dn};
    case Observable::T2:
      return {s * c *
              (sqrt_nonneg(n1 + ell1) * kron(ell1, ell2 + 1) +
               sqrt_nonneg(n1 + ell2) * kron(ell2, ell1 + 1)) *
              dn};
    case Observable::M3:
      return {s * hbar * ell1 * dl * dn};
    case Observable::p1:
      return {kI * c *
              (sqrt_nonneg(n1) * kron(ell2, ell1 + 1) * kron(n1, n2 + 1) -
               sqrt_nonneg(n2) * kron(ell1, ell2 + 1) * kron(n2, n1 + 1))};
    case Observable::p2:
      return {-s * c *
              (sqrt_nonneg(n1) * kron(ell2, ell1 + 1) * kron(n1, n2 + 1) +
               sqrt_nonneg(n2) * kron(ell1, ell2 + 1) * kron(n2, n1 + 1))};
    case Observable::L3: {
      if (n1 == n2) return {-s * hbar * (2.0 * n1 + 1.0) * dl};
      // -s hbar (a+^dag a-^dag + a+ a-) connects n and n +- 1 at fixed l.
      const double raise = kron(f1.n_plus, f2.n_plus + 1) * kron(f1.n_minus, f2.n_minus + 1) *
                           std::sqrt(static_cast<double>(f1.n_plus) * f1.n_minus);
      const double lower = kron(f1.n_plus, f2.n_plus - 1) * kron(f1.n_minus, f2.n_minus - 1) *
                           std::sqrt(static_cast<double>(f2.n_plus) * f2.n_minus);
      return {-s * hbar * (raise + lower), true};
    }
    default:
      throw UnknownName(std::string(name_of(o)));
  }
}

cdouble change_of_basis(int n_plus, double T1, const PhysicalParams& p) {
  if (n_plus < 0) throw std::invalid_argument("n+ must be >= 0");
  const double k = p.hbar * p.m * p.omega_c();
  const double t = T1 / std::sqrt(k);
  const double mag = std::pow(std::numbers::pi * k, -0.25) * std::exp(-0.5 * t * t) *
                     normalized_hermite(n_plus, t);
  return i_power(n_plus) * mag;
}

cdouble level_phase(int n_minus, const PhysicalParams& p) {
  if (n_minus < 0) throw std::invalid_argument("n- must be >= 0");
  // (i s)^n = i^n s^n
  return i_power(n_minus) * ((p.s() < 0 && n_minus % 2 == 1) ? -1.0 : 1.0);
}

GaugeVariant gauge_variant_from_name(std::string_view name) {
  if (name == "pi1") return GaugeVariant::pi1;
  if (name == "pi2") return GaugeVariant::pi2;
  if (name == "L3c") return GaugeVariant::L3c;
  throw UnknownName(std::string(name));
}

std::string_view name_of(GaugeVariant v) {
  switch (v) {
    case GaugeVariant::pi1: return "pi1";
    case GaugeVariant::pi2: return "pi2";
    case GaugeVariant::L3c: return "L3c";
  }
  return "?";
}

FockOperator gauge_variant_matrix(GaugeVariant which, const GaugeChoice& g,
                                  const PhysicalParams& p, const FockBasis& b) {
  const double qB = p.qB();
  const Poly2 qphi = g.phi * p.q;
  const Poly2 u1 = Poly2::variable(0);
  const Poly2 u2 = Poly2::variable(1);
  switch (which) {
    case GaugeVariant::pi1:
      return build_observable(Observable::T1, p, g.x0, b) +
             poly_operator(u2 * (-0.5 * (g.alpha - 1.0) * qB) + qphi.derivative(0), p, b);
    case GaugeVariant::pi2:
      return build_observable(Observable::T2, p, g.x0, b) +
             poly_operator(u1 * (-0.5 * (g.alpha + 1.0) * qB) + qphi.derivative(1), p, b);
    case GaugeVariant::L3c: {
      const Poly2 shift = (u1 * u1 - u2 * u2) * (-0.5 * g.alpha * qB) +
                          u1 * qphi.derivative(1) - u2 * qphi.derivative(0);
      return build_observable(Observable::M3, p, g.x0, b) + poly_operator(shift, p, b);
    }
  }
  throw UnknownName("gauge variant");
}

}  // namespace landau
