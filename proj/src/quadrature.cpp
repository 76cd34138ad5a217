#include "landau/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "landau/errors.hpp"

namespace landau {

namespace {

constexpr double kSupportRatio = 1e-12;
constexpr Eigen::Index kBlock = 256;

// Orthonormal Hermite functions psi_n(t), psi_{n-1}(t) as exp(log_scale) * (value, prev).
// The running rescale keeps large-t nodes of big rules from underflowing.
struct HermitePair {
  double value;
  double prev;
  double log_scale;
};

HermitePair hermite_function(int n, double t) {
  double prev = 0.0;
  double cur = 1.0;
  double log_scale = -0.5 * t * t - 0.25 * std::log(std::numbers::pi);
  for (int j = 0; j < n; ++j) {
    const double next = std::sqrt(2.0 / (j + 1)) * t * cur - std::sqrt(j / (j + 1.0)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > 1e150) {
      cur *= 1e-150;
      prev *= 1e-150;
      log_scale += 150.0 * std::log(10.0);
    }
  }
  return {cur, prev, log_scale};
}

struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double result() const { return sum + comp; }
};

}  // namespace

Scheme scheme_from_name(std::string_view name) {
  if (name == "gh") return Scheme::gauss_hermite;
  if (name == "simpson") return Scheme::simpson;
  throw UnknownName(std::string(name));
}

std::string_view name_of(Scheme s) { return s == Scheme::gauss_hermite ? "gh" : "simpson"; }

Rule1 gauss_hermite_rule(int k, double centre, double scale) {
  if (k < 3) throw std::invalid_argument("Gauss-Hermite rule needs at least 3 nodes");
  if (!(scale > 0.0)) throw std::invalid_argument("rule scale must be > 0");
  // Golub-Welsch for the initial nodes, then Newton on the Hermite function.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(k);
  Eigen::VectorXd sub(k - 1);
  for (int j = 1; j < k; ++j) sub[j - 1] = std::sqrt(0.5 * j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  std::vector<double> t(es.eigenvalues().data(), es.eigenvalues().data() + k);
  for (double& x : t) {
    for (int it = 0; it < 4; ++it) {
      const HermitePair h = hermite_function(k, x);
      const double d = std::sqrt(2.0 * k) * h.prev - x * h.value;
      if (d == 0.0) break;
      x -= h.value / d;
    }
  }
  std::sort(t.begin(), t.end());
  for (int j = 0; j < k / 2; ++j) {
    const double m = 0.5 * (t[k - 1 - j] - t[j]);
    t[j] = -m;
    t[k - 1 - j] = m;
  }
  if (k % 2 == 1) t[k / 2] = 0.0;

  Rule1 r;
  r.nodes.resize(k);
  r.weights.resize(k);
  for (int j = 0; j < k; ++j) {
    const HermitePair h = hermite_function(k - 1, t[j]);
    r.nodes[j] = centre + scale * t[j];
    // scale / (k psi_{k-1}^2), assembled in logs
    r.weights[j] = scale / k * std::exp(-2.0 * (h.log_scale + std::log(std::abs(h.value))));
  }
  return r;
}

Rule1 simpson_rule(int k, double centre, double half_width) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("Simpson rule needs an odd node count >= 3");
  if (!(half_width > 0.0)) throw std::invalid_argument("rule half width must be > 0");
  const double h = 2.0 * half_width / (k - 1);
  Rule1 r;
  r.nodes.resize(k);
  r.weights.resize(k);
  for (int j = 0; j < k; ++j) {
    r.nodes[j] = centre - half_width + j * h;
    const double f = (j == 0 || j == k - 1) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
    r.weights[j] = f * h / 3.0;
  }
  return r;
}

Rule1 AxisSpec::rule() const {
  return scheme == Scheme::gauss_hermite ? gauss_hermite_rule(k, centre, scale)
                                         : simpson_rule(k, centre, scale);
}

AxisSpec AxisSpec::coarse() const {
  AxisSpec out = *this;
  if (scheme == Scheme::gauss_hermite) {
    out.k = std::max(3, k / 2);
  } else {
    out.k = std::max(3, (k - 1) / 2 + 1);
    if (out.k % 2 == 0) ++out.k;
  }
  return out;
}

Grid2::Grid2(const AxisSpec& a1, const AxisSpec& a2) : axes_{a1, a2} {
  const Rule1 r1 = a1.rule();
  const Rule1 r2 = a2.rule();
  const std::size_t n1 = r1.nodes.size();
  const std::size_t n2 = r2.nodes.size();
  points_.reserve(n1 * n2);
  weights_.reserve(n1 * n2);
  boundary_.reserve(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      points_.emplace_back(r1.nodes[i], r2.nodes[j]);
      weights_.push_back(r1.weights[i] * r2.weights[j]);
      boundary_.push_back(i == 0 || j == 0 || i + 1 == n1 || j + 1 == n2);
    }
  }
}

Grid2 default_grid(const PhysicalParams& p, const Point& centre, int k, Scheme scheme) {
  const double width = std::sqrt(2.0) * p.lambda();
  const double scale = scheme == Scheme::gauss_hermite ? width : 10.0 * width;
  if (scheme == Scheme::simpson && k % 2 == 0) ++k;
  return Grid2({scheme, k, centre.x(), scale}, {scheme, k, centre.y(), scale});
}

Grid2 overlap_grid(const PhysicalParams& p, const Point& x0, double T1, int k, Scheme scheme) {
  // exp(-u1^2 / 4 l^2) across, exp(-3 (u2 + 2 T1 / 3 qB)^2 / 4 l^2) along x2
  const double lam = p.lambda();
  const double s1 = 2.0 * lam;
  const double s2 = 2.0 * lam / std::sqrt(3.0);
  const double c2 = x0.y() - 2.0 * T1 / (3.0 * p.qB());
  const double widen = scheme == Scheme::gauss_hermite ? 1.0 : 10.0;
  if (scheme == Scheme::simpson && k % 2 == 0) ++k;
  return Grid2({scheme, k, x0.x(), widen * s1}, {scheme, k, c2, widen * s2});
}

cdouble compensated_sum(const Eigen::VectorXcd& terms) {
  Neumaier re;
  Neumaier im;
  for (Eigen::Index start = 0; start < terms.size(); start += kBlock) {
    Neumaier bre;
    Neumaier bim;
    const Eigen::Index end = std::min(terms.size(), start + kBlock);
    for (Eigen::Index i = start; i < end; ++i) {
      bre.add(terms[i].real());
      bim.add(terms[i].imag());
    }
    re.add(bre.result());
    im.add(bim.result());
  }
  return {re.result(), im.result()};
}

Field sample(const WaveForm& psi, const Grid2& grid) {
  Field out(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i) out[i] = psi.value(grid.point(i));
  return out;
}

JetField sample_jets(const WaveForm& psi, const Grid2& grid) {
  JetField out;
  out.reserve(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i) out.push_back(psi.jet(grid.point(i)));
  return out;
}

OpField sample_op(const DiffOpSpec& op, const Grid2& grid) {
  const Eigen::Index n = grid.size();
  auto fill = [&](const CPoly2& f) {
    Field v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Point u = grid.point(i) - op.x0;
      v[i] = f(std::array<double, 2>{u.x(), u.y()});
    }
    return v;
  };
  OpField out;
  out.c = fill(op.c);
  for (int i = 0; i < 2; ++i) {
    out.has_b[i] = !op.b[i].is_zero();
    if (out.has_b[i]) out.b[i] = fill(op.b[i]);
    for (int k = 0; k < 2; ++k) {
      out.has_a[i][k] = !op.a[i][k].is_zero();
      if (out.has_a[i][k]) out.a[i][k] = fill(op.a[i][k]);
    }
  }
  return out;
}

Field applied(const OpField& op, const JetField& psi) {
  const Eigen::Index n = op.c.size();
  if (static_cast<Eigen::Index>(psi.size()) != n)
    throw std::invalid_argument("operator and state sampled on different grids");
  Field out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const CJet2& j = psi[i];
    cdouble v = op.c[i] * j.value;
    for (int a = 0; a < 2; ++a) {
      if (op.has_b[a]) v += op.b[a][i] * j.grad[a];
      for (int b = 0; b < 2; ++b)
        if (op.has_a[a][b]) v += op.a[a][b][i] * j.hess(a, b);
    }
    out[i] = v;
  }
  return out;
}

Field values(const JetField& psi) {
  Field out(static_cast<Eigen::Index>(psi.size()));
  for (std::size_t i = 0; i < psi.size(); ++i) out[i] = psi[i].value;
  return out;
}

cdouble integrate_product(const Field& a, const Field& b, const Grid2& grid) {
  if (a.size() != grid.size() || b.size() != grid.size())
    throw std::invalid_argument("field size does not match grid");
  Eigen::VectorXcd terms(grid.size());
  double peak = 0.0;
  double edge = 0.0;
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const cdouble f = std::conj(a[i]) * b[i];
    const double mag = std::abs(f);
    peak = std::max(peak, mag);
    if (grid.boundary(i)) edge = std::max(edge, mag);
    terms[i] = grid.weight(i) * f;
  }
  if (edge > kSupportRatio * peak) throw SupportOverflow(edge, peak);
  return compensated_sum(terms);
}

QuadResult inner_product(const WaveForm& psi1, const WaveForm& psi2, const Grid2& grid) {
  const Grid2 half = grid.coarse();
  const cdouble fine = integrate_product(sample(psi1, grid), sample(psi2, grid), grid);
  const cdouble rough = integrate_product(sample(psi1, half), sample(psi2, half), half);
  return {fine, std::abs(fine - rough)};
}

QuadResult matrix_element(const WaveForm& psi1, const DiffOpSpec& op, const WaveForm& psi2,
                          const Grid2& grid) {
  auto on = [&](const Grid2& g) {
    return integrate_product(sample(psi1, g), applied(sample_op(op, g), sample_jets(psi2, g)), g);
  };
  const cdouble fine = on(grid);
  const cdouble rough = on(grid.coarse());
  return {fine, std::abs(fine - rough)};
}

QuadResult line_integral(const std::function<cdouble(double)>& f, const AxisSpec& axis) {
  auto on = [&](const AxisSpec& ax) {
    const Rule1 r = ax.rule();
    const std::size_t n = r.nodes.size();
    Eigen::VectorXcd terms(static_cast<Eigen::Index>(n));
    double peak = 0.0;
    double edge = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const cdouble v = f(r.nodes[i]);
      const double mag = std::abs(v);
      peak = std::max(peak, mag);
      if (i == 0 || i + 1 == n) edge = std::max(edge, mag);
      terms[static_cast<Eigen::Index>(i)] = r.weights[i] * v;
    }
    if (edge > kSupportRatio * peak) throw SupportOverflow(edge, peak);
    return compensated_sum(terms);
  };
  const cdouble fine = on(axis);
  const cdouble rough = on(axis.coarse());
  return {fine, std::abs(fine - rough)};
}

}  // namespace landau
