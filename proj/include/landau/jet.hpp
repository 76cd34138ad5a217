#pragma once

#include <Eigen/Dense>
#include <complex>

#include "landau/polynomial.hpp"

namespace landau {

/// Value, gradient and Hessian of a scalar field on the plane at one point.
/// Products and compositions follow the product and chain rules exactly, so
/// wave functions built from factors get analytic second derivatives.
template <typename Scalar>
struct Jet2 {
  using Vec = Eigen::Matrix<Scalar, 2, 1>;
  using Mat = Eigen::Matrix<Scalar, 2, 2>;

  Scalar value{};
  Vec grad = Vec::Zero();
  Mat hess = Mat::Zero();

  static Jet2 constant(Scalar c) {
    Jet2 j;
    j.value = c;
    return j;
  }

  Jet2& operator*=(const Jet2& o) {
    hess = hess * o.value + grad * o.grad.transpose() + o.grad * grad.transpose() +
           value * o.hess;
    grad = grad * o.value + value * o.grad;
    value *= o.value;
    return *this;
  }
  Jet2& operator+=(const Jet2& o) {
    value += o.value;
    grad += o.grad;
    hess += o.hess;
    return *this;
  }
  Jet2& operator*=(Scalar s) {
    value *= s;
    grad *= s;
    hess *= s;
    return *this;
  }

  friend Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator*(Jet2 a, Scalar s) { return a *= s; }
  friend Jet2 operator*(Scalar s, Jet2 a) { return a *= s; }

  /// F(this) given F, F', F'' evaluated at this->value.
  Jet2 compose(Scalar f0, Scalar f1, Scalar f2) const {
    Jet2 out;
    out.value = f0;
    out.grad = f1 * grad;
    out.hess = f2 * grad * grad.transpose() + f1 * hess;
    return out;
  }

  template <typename Other>
  Jet2<Other> cast() const {
    Jet2<Other> out;
    out.value = Other(value);
    out.grad = grad.template cast<Other>();
    out.hess = hess.template cast<Other>();
    return out;
  }
};

using CJet2 = Jet2<std::complex<double>>;

template <typename Scalar>
Jet2<Scalar> exp(const Jet2<Scalar>& j) {
  using std::exp;
  const Scalar e = exp(j.value);
  return j.compose(e, e, e);
}

/// Exact jet of a bivariate polynomial at u.
template <typename Scalar>
Jet2<Scalar> jet(const Polynomial<Scalar, 2>& poly, const Eigen::Vector2d& u) {
  Jet2<Scalar> out;
  const int d = poly.degree();
  // pw[k][j + 2] = u_k^j, with zeros for j < 0
  constexpr int kStack = 34;
  std::array<std::array<double, kStack>, 2> stack;
  std::array<std::vector<double>, 2> heap;
  std::array<double*, 2> pw{stack[0].data(), stack[1].data()};
  if (d + 3 > kStack) {
    for (int k = 0; k < 2; ++k) {
      heap[k].resize(d + 3);
      pw[k] = heap[k].data();
    }
  }
  for (int k = 0; k < 2; ++k) {
    pw[k][0] = pw[k][1] = 0.0;
    pw[k][2] = 1.0;
    for (int j = 1; j <= d; ++j) pw[k][j + 2] = pw[k][j + 1] * u[k];
  }
  auto p = [&pw](int k, int j) { return pw[k][j + 2]; };
  for (const auto& [e, c] : poly.terms()) {
    const int i = e[0];
    const int j = e[1];
    out.value += c * (p(0, i) * p(1, j));
    out.grad[0] += c * (i * p(0, i - 1) * p(1, j));
    out.grad[1] += c * (j * p(0, i) * p(1, j - 1));
    out.hess(0, 0) += c * (i * (i - 1.0) * p(0, i - 2) * p(1, j));
    out.hess(1, 1) += c * (j * (j - 1.0) * p(0, i) * p(1, j - 2));
    const Scalar mixed = c * (static_cast<double>(i) * j * p(0, i - 1) * p(1, j - 1));
    out.hess(0, 1) += mixed;
    out.hess(1, 0) += mixed;
  }
  return out;
}

}  // namespace landau
