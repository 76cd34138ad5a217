#pragma once

#include <array>
#include <variant>

namespace landau {

// Physicists' Hermite and generalised Laguerre polynomials by upward
// three-term recurrence.

double hermite(int n, double x);
/// H_n / sqrt(2^n n!), via the rescaled recurrence (no overflow for large n).
double normalized_hermite(int n, double x);
double laguerre(int n, int m, double x);

/// (value, first, second) derivatives using H'_n = 2n H_{n-1}.
std::array<double, 3> hermite_derivatives(int n, double x);
/// Derivatives of H_n / sqrt(2^n n!).
std::array<double, 3> normalized_hermite_derivatives(int n, double x);
/// (value, first, second) derivatives using d/dx L^m_n = -L^{m+1}_{n-1}.
std::array<double, 3> laguerre_derivatives(int n, int m, double x);

struct HermiteKind {
  int n;
};
struct LaguerreKind {
  int n;
  int m;
};
using SpecialKind = std::variant<HermiteKind, LaguerreKind>;

double special_eval(const SpecialKind& kind, double x);

}  // namespace landau
