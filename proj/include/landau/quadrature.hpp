#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string_view>
#include <vector>

#include "landau/waves.hpp"

namespace landau {

enum class Scheme { gauss_hermite, simpson };

/// "gh" or "simpson"; throws UnknownName.
Scheme scheme_from_name(std::string_view name);
std::string_view name_of(Scheme s);

/// Nodes and weights for the plain integral of f over the real line
/// (Gauss-Hermite weights carry the factor exp(t^2) and the scale).
struct Rule1 {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// k-point Gauss-Hermite rule on x = centre + scale * t.
Rule1 gauss_hermite_rule(int k, double centre, double scale);
/// Composite Simpson rule with k nodes (k odd) on [centre - half_width, centre + half_width].
Rule1 simpson_rule(int k, double centre, double half_width);

/// One axis of a tensor grid. For simpson, scale is the half width.
struct AxisSpec {
  Scheme scheme = Scheme::gauss_hermite;
  int k = 80;
  double centre = 0.0;
  double scale = 1.0;

  Rule1 rule() const;
  /// Same axis with half the nodes, used for the error estimate.
  AxisSpec coarse() const;
};

class Grid2 {
 public:
  Grid2(const AxisSpec& a1, const AxisSpec& a2);

  Eigen::Index size() const { return static_cast<Eigen::Index>(points_.size()); }
  const Point& point(Eigen::Index i) const { return points_[i]; }
  double weight(Eigen::Index i) const { return weights_[i]; }
  bool boundary(Eigen::Index i) const { return boundary_[i]; }
  const std::array<AxisSpec, 2>& axes() const { return axes_; }
  Grid2 coarse() const { return Grid2(axes_[0].coarse(), axes_[1].coarse()); }

 private:
  std::array<AxisSpec, 2> axes_;
  std::vector<Point> points_;
  std::vector<double> weights_;
  std::vector<bool> boundary_;
};

/// Tensor grid about centre suited to products of two Landau-level states:
/// Gauss-Hermite scale sqrt(2) lambda, or a Simpson box of half width 10 sqrt(2) lambda.
Grid2 default_grid(const PhysicalParams& p, const Point& centre, int k = 80,
                   Scheme scheme = Scheme::gauss_hermite);

/// Grid matched to products of a Landau-level state with the T1 eigenstate of label T1.
Grid2 overlap_grid(const PhysicalParams& p, const Point& x0, double T1, int k = 80,
                   Scheme scheme = Scheme::gauss_hermite);

struct QuadResult {
  cdouble value;
  /// |I(k) - I(k/2)|
  double error_estimate = 0.0;
};

/// Fixed-order Neumaier summation in blocks of 256 terms.
cdouble compensated_sum(const Eigen::VectorXcd& terms);

/// Values of a state or of an operator applied to a state on grid nodes.
using Field = Eigen::VectorXcd;

/// Jets of one state on all grid nodes.
using JetField = std::vector<CJet2>;

/// Operator coefficients on all grid nodes.
struct OpField {
  Field c;
  std::array<Field, 2> b;
  std::array<std::array<Field, 2>, 2> a;
  std::array<bool, 2> has_b{};
  std::array<std::array<bool, 2>, 2> has_a{};
};

Field sample(const WaveForm& psi, const Grid2& grid);
JetField sample_jets(const WaveForm& psi, const Grid2& grid);
OpField sample_op(const DiffOpSpec& op, const Grid2& grid);
Field applied(const OpField& op, const JetField& psi);
Field values(const JetField& psi);

/// sum_i w_i conj(a_i) b_i. Throws SupportOverflow when the integrand on the grid
/// boundary exceeds 1e-12 of its peak.
cdouble integrate_product(const Field& a, const Field& b, const Grid2& grid);

QuadResult inner_product(const WaveForm& psi1, const WaveForm& psi2, const Grid2& grid);
QuadResult matrix_element(const WaveForm& psi1, const DiffOpSpec& op, const WaveForm& psi2,
                          const Grid2& grid);
QuadResult line_integral(const std::function<cdouble(double)>& f, const AxisSpec& axis);

}  // namespace landau
