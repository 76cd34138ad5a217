#include "landau/special.hpp"

#include <cmath>
#include <stdexcept>
#include <type_traits>

namespace landau {

double hermite(int n, double x) {
  if (n < 0) return 0.0;
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double normalized_hermite(int n, double x) {
  if (n < 0) return 0.0;
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = std::sqrt(2.0) * x;
  for (int k = 1; k < n; ++k) {
    const double next =
        x * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre(int n, int m, double x) {
  if (n < 0) return 0.0;
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + m - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + m - x) * cur - (k + m) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::array<double, 3> hermite_derivatives(int n, double x) {
  return {hermite(n, x), 2.0 * n * hermite(n - 1, x),
          4.0 * n * (n - 1.0) * hermite(n - 2, x)};
}

std::array<double, 3> normalized_hermite_derivatives(int n, double x) {
  return {normalized_hermite(n, x), std::sqrt(2.0 * n) * normalized_hermite(n - 1, x),
          2.0 * std::sqrt(n * (n - 1.0)) * normalized_hermite(n - 2, x)};
}

std::array<double, 3> laguerre_derivatives(int n, int m, double x) {
  return {laguerre(n, m, x), -laguerre(n - 1, m + 1, x), laguerre(n - 2, m + 2, x)};
}

double special_eval(const SpecialKind& kind, double x) {
  return std::visit(
      [x](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if (k.n < 0) throw std::invalid_argument("polynomial order must be >= 0");
        if constexpr (std::is_same_v<K, HermiteKind>) {
          return hermite(k.n, x);
        } else {
          if (k.m < 0) throw std::invalid_argument("Laguerre parameter must be >= 0");
          return laguerre(k.n, k.m, x);
        }
      },
      kind);
}

}  // namespace landau
