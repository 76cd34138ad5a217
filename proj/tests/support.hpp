#pragma once
// Shared helpers for the unit tests.

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "landau/polynomial.hpp"

namespace test {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Random Poly2 with a handful of terms of total degree <= deg.
inline landau::Poly2 random_poly(std::mt19937_64& rng, int deg, int terms = 5) {
  landau::Poly2 out;
  std::uniform_int_distribution<int> pick(0, deg);
  for (int k = 0; k < terms; ++k) {
    const int i = pick(rng);
    const int j = std::uniform_int_distribution<int>(0, deg - i)(rng);
    out.add_term({i, j}, std::round(uniform(rng, -1.0, 1.0) * 1000.0) / 1000.0);
  }
  return out;
}

template <typename P>
void check_close(const P& a, const P& b, double tol) {
  const P d = a - b;
  for (const auto& [e, c] : d.terms()) CHECK(std::abs(c) <= tol);
}

inline void check_close(std::complex<double> a, std::complex<double> b, double tol) {
  CHECK(std::abs(a - b) <= tol);
}

}  // namespace test
