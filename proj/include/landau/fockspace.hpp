#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string_view>
#include <utility>

#include "landau/params.hpp"
#include "landau/polynomial.hpp"

namespace landau {

using cdouble = std::complex<double>;

/// Truncated two-sector helicity Fock basis |n+, n->, 0 <= n+- <= nmax.
/// Flat index = n+ * (nmax + 1) + n-.
class FockBasis {
 public:
  explicit FockBasis(int nmax);

  int nmax() const { return nmax_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(nmax_ + 1) * (nmax_ + 1); }
  Eigen::Index index(int n_plus, int n_minus) const;
  std::pair<int, int> occupation(Eigen::Index i) const;
  /// Both occupations at most nmax - margin.
  bool interior(Eigen::Index i, int margin) const;

 private:
  int nmax_;
};

/// Dense operator on a FockBasis with its ladder excursion: the largest number
/// of quanta it can add or remove in either sector.
struct FockOperator {
  Eigen::MatrixXcd matrix;
  int excursion = 0;

  FockOperator adjoint() const { return {matrix.adjoint(), excursion}; }

  friend FockOperator operator+(const FockOperator& a, const FockOperator& b) {
    return {a.matrix + b.matrix, std::max(a.excursion, b.excursion)};
  }
  friend FockOperator operator-(const FockOperator& a, const FockOperator& b) {
    return {a.matrix - b.matrix, std::max(a.excursion, b.excursion)};
  }
  /// Product through sparse storage; ladder operators have few nonzeros.
  friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator*(cdouble s, const FockOperator& a) {
    return {s * a.matrix, a.excursion};
  }
  friend FockOperator operator*(const FockOperator& a, cdouble s) { return s * a; }
};

FockOperator identity(const FockBasis& b);
FockOperator commutator(const FockOperator& a, const FockOperator& b);

/// Angular label |s hbar l, E_n> with l >= -n.
struct AngularLabel {
  int ell;
  int n;
};
struct FockLabel {
  int n_plus;
  int n_minus;
};

/// n+ = n + l, n- = n. Throws std::invalid_argument if l < -n or n < 0.
FockLabel to_fock(const AngularLabel& a);
AngularLabel to_angular(const FockLabel& f);

struct LadderOps {
  FockOperator a_plus;
  FockOperator a_plus_dag;
  FockOperator a_minus;
  FockOperator a_minus_dag;
};

/// Throws TruncationError if nmax < 1.
LadderOps ladder_ops(const FockBasis& b);

enum class Observable { H, T1, T2, M3, p1, p2, L3, xc1, xc2, x1, x2 };

Observable observable_from_name(std::string_view name);
std::string_view name_of(Observable o);

FockOperator build_observable(Observable o, const PhysicalParams& p, const Point& x0,
                              const FockBasis& b);

/// f(x1 - x01, x2 - x02) as a product of truncated position matrices.
/// Throws TruncationError if deg f > nmax.
FockOperator poly_operator(const Poly2& f, const PhysicalParams& p, const FockBasis& b);

/// Restrict to rows and columns whose occupations are both <= nmax - margin.
Eigen::MatrixXcd interior_project(const Eigen::MatrixXcd& m, const FockBasis& b, int margin);
double interior_deviation(const FockOperator& op, const FockBasis& b, int margin);

/// Max |[A,B] - expected| on the interior. Throws TruncationError if
/// margin < A.excursion + B.excursion or the interior is empty.
double commutator_check(const FockOperator& a, const FockOperator& b,
                        const FockOperator& expected, const FockBasis& basis, int margin);

struct TableElement {
  cdouble value;
  /// Set for L3 with n1 != n2, which the closed-form listing omits; the value
  /// then comes from the helicity ladder form of L3.
  bool beyond_table = false;
};

/// Closed-form matrix element <l1, n1| O |l2, n2> in the angular eigenbasis.
/// Supports H, T1, T2, M3, p1, p2, L3; throws UnknownName for the rest.
TableElement table2_element(Observable o, int ell1, int n1, int ell2, int n2,
                            const PhysicalParams& p);

/// i^{n+} / sqrt(2^{n+} n+!) (pi hbar m w)^{-1/4} exp(-T1^2 / (2 hbar m w)) H_{n+}(T1 / sqrt(hbar m w)).
cdouble change_of_basis(int n_plus, double T1, const PhysicalParams& p);

/// (i s)^{n-}: phase of <n+, n-|T1, E_{n-}> relative to change_of_basis for the
/// position-space eigenfunctions psi_fock and psi_T1.
cdouble level_phase(int n_minus, const PhysicalParams& p);

enum class GaugeVariant { pi1, pi2, L3c };

GaugeVariant gauge_variant_from_name(std::string_view name);
std::string_view name_of(GaugeVariant v);

/// Canonical momenta and canonical angular momentum of gauge g, assembled from
/// the Noether charges plus polynomial position operators.
FockOperator gauge_variant_matrix(GaugeVariant which, const GaugeChoice& g,
                                  const PhysicalParams& p, const FockBasis& b);

}  // namespace landau
