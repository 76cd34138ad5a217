#include <charconv>
#include <cmath>
#include <ostream>

#include "landau/campaigns.hpp"

namespace landau {

namespace {

std::string fmt(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

}  // namespace

Tolerances Tolerances::uniform(double tol) { return {tol, tol, tol, tol, tol}; }

double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

Poly2 random_phi(int degree, std::mt19937_64& rng) {
  Poly2 out;
  for (int d = 1; d <= degree; ++d) {
    const double amp = d <= 2 ? 0.5 : 0.1;
    for (int i = d; i >= 0; --i) out.add_term({i, d - i}, round3(uniform(rng, -amp, amp)));
  }
  return out;
}

std::vector<GaugeChoice> default_scan_gauges(const Point& x0, std::uint64_t seed) {
  std::vector<GaugeChoice> out;
  for (double a : {-1.0, 0.0, 0.37, 1.0, 2.0}) out.push_back({a, x0, Poly2{}});
  std::mt19937_64 rng(seed);
  out.push_back({0.0, x0, random_phi(2, rng)});
  out.push_back({0.37, x0, random_phi(3, rng)});
  return out;
}

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << "basis,operator,indices,closed_form_re,closed_form_im,computed_re,computed_im,abs_error\n";
  for (const auto& r : rows) {
    os << r.basis << ',' << r.op << ',' << r.indices << ',' << fmt(r.closed_form.real()) << ','
       << fmt(r.closed_form.imag()) << ',' << fmt(r.computed.real()) << ','
       << fmt(r.computed.imag()) << ',' << fmt(std::abs(r.computed - r.closed_form)) << '\n';
  }
}

void write_trajectory_csv(std::ostream& os, const ClassicalResult& r) {
  os << "t,x1,x2,p1,p2,E,T1,T2,M3\n";
  for (std::size_t i = 0; i < r.states.size(); ++i) {
    const auto& s = r.states[i];
    const auto& c = r.charges[i];
    os << fmt(r.times[i]) << ',' << fmt(s.x.x()) << ',' << fmt(s.x.y()) << ',' << fmt(s.p.x())
       << ',' << fmt(s.p.y()) << ',' << fmt(c.E) << ',' << fmt(c.T1) << ',' << fmt(c.T2) << ','
       << fmt(c.M3) << '\n';
  }
}

void write_grid_csv(std::ostream& os, const WaveForm& psi, const Grid2& grid) {
  os << "x1,x2,re,im\n";
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const Point& x = grid.point(i);
    const cdouble v = psi.value(x);
    os << fmt(x.x()) << ',' << fmt(x.y()) << ',' << fmt(v.real()) << ',' << fmt(v.imag()) << '\n';
  }
}

}  // namespace landau
