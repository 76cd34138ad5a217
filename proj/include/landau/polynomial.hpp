#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <map>
#include <numeric>
#include <type_traits>
#include <vector>

#include "landau/errors.hpp"

namespace landau {

inline constexpr int kDefaultMaxDegree = 6;

/// Sparse multivariate polynomial with exact coefficient arithmetic.
///
/// Terms are keyed by exponent tuples; zero coefficients are never stored.
/// Every polynomial carries a total-degree bound and any operation whose result
/// would exceed it throws DegreeOverflow. Binary operations adopt the larger of
/// the two operand bounds.
template <typename Scalar, int NVars>
class Polynomial {
 public:
  using Exponents = std::array<int, NVars>;
  using Terms = std::map<Exponents, Scalar>;
  using scalar_type = Scalar;
  static constexpr int kVars = NVars;

  Polynomial() = default;
  explicit Polynomial(int max_degree) : max_degree_(max_degree) {}

  static Polynomial constant(Scalar c, int max_degree = kDefaultMaxDegree) {
    Polynomial out(max_degree);
    out.add_term(Exponents{}, c);
    return out;
  }

  static Polynomial variable(int var, int max_degree = kDefaultMaxDegree) {
    Exponents e{};
    e[var] = 1;
    return monomial(e, Scalar(1), max_degree);
  }

  static Polynomial monomial(const Exponents& e, Scalar c,
                             int max_degree = kDefaultMaxDegree) {
    Polynomial out(max_degree);
    out.add_term(e, c);
    return out;
  }

  const Terms& terms() const { return terms_; }
  int max_degree() const { return max_degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Highest total degree among stored terms; 0 for the zero polynomial.
  int degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  Scalar coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Exponents& e, Scalar c) {
    if (c == Scalar(0)) return;
    const int d = total_degree(e);
    if (d > max_degree_) throw DegreeOverflow(d, max_degree_);
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

  /// Same terms under a different degree bound.
  Polynomial with_max_degree(int max_degree) const {
    Polynomial out(max_degree);
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
  }

  template <typename Other>
  Polynomial<Other, NVars> cast() const {
    Polynomial<Other, NVars> out(max_degree_);
    for (const auto& [e, c] : terms_) out.add_term(e, Other(c));
    return out;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    max_degree_ = std::max(max_degree_, rhs.max_degree_);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    max_degree_ = std::max(max_degree_, rhs.max_degree_);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(Scalar s) {
    if (s == Scalar(0)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      if (it->second == Scalar(0))
        it = terms_.erase(it);
      else
        ++it;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, Scalar s) { return lhs *= s; }
  friend Polynomial operator*(Scalar s, Polynomial rhs) { return rhs *= s; }
  friend Polynomial operator-(Polynomial p) { return p *= Scalar(-1); }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial out(std::max(lhs.max_degree_, rhs.max_degree_));
    for (const auto& [ea, ca] : lhs.terms_) {
      for (const auto& [eb, cb] : rhs.terms_) {
        Exponents e;
        for (int k = 0; k < NVars; ++k) e[k] = ea[k] + eb[k];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  /// Coefficient-level equality; degree bounds are not compared.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

  Polynomial derivative(int var) const {
    Polynomial out(max_degree_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      d[var] -= 1;
      out.add_term(d, c * Scalar(e[var]));
    }
    return out;
  }

  /// Replace variable `var` by `replacement` (exact composition).
  Polynomial substitute(int var, const Polynomial& replacement) const {
    const int bound = std::max(max_degree_, replacement.max_degree_);
    Polynomial out(bound);
    std::vector<Polynomial> powers{Polynomial::constant(Scalar(1), bound)};
    for (const auto& [e, c] : terms_) {
      while (static_cast<int>(powers.size()) <= e[var])
        powers.push_back(powers.back() * replacement);
      Exponents rest = e;
      rest[var] = 0;
      out += Polynomial::monomial(rest, c, bound) * powers[e[var]];
    }
    return out;
  }

  /// Evaluate at a point; the result type follows the usual promotion rules.
  template <typename T>
  auto operator()(const std::array<T, NVars>& x) const {
    using R = decltype(Scalar{} * T{});
    const int d = degree();
    // Power table u_k^j; a stack buffer covers the usual low degrees.
    constexpr int kStack = 32;
    std::array<T, NVars * kStack> stack;
    std::vector<T> heap;
    T* pw = stack.data();
    const int stride = d + 1;
    if (stride > kStack) {
      heap.resize(static_cast<std::size_t>(NVars) * stride);
      pw = heap.data();
    }
    for (int k = 0; k < NVars; ++k) {
      pw[k * stride] = T(1);
      for (int j = 1; j <= d; ++j) pw[k * stride + j] = pw[k * stride + j - 1] * x[k];
    }
    R acc{};
    for (const auto& [e, c] : terms_) {
      R term = c;
      for (int k = 0; k < NVars; ++k) term *= pw[k * stride + e[k]];
      acc += term;
    }
    return acc;
  }

  static int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
  }

 private:
  Terms terms_;
  int max_degree_ = kDefaultMaxDegree;
};

/// Real polynomial in shifted plane coordinates u = x - x0.
using Poly2 = Polynomial<double, 2>;
/// Complex polynomial in shifted plane coordinates.
using CPoly2 = Polynomial<std::complex<double>, 2>;

}  // namespace landau
