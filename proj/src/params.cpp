#include "landau/params.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace landau {

void PhysicalParams::validate() const {
  if (!(m > 0.0) || !std::isfinite(m)) throw std::invalid_argument("mass must be > 0");
  if (q == 0.0 || !std::isfinite(q)) throw std::invalid_argument("charge must be nonzero");
  if (B == 0.0 || !std::isfinite(B)) throw std::invalid_argument("field must be nonzero");
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw std::invalid_argument("hbar must be > 0");
}

double PhysicalParams::omega_c() const { return std::abs(q * B) / m; }

double PhysicalParams::lambda() const { return std::sqrt(hbar / (m * omega_c())); }

DerivedParams derived_params(const PhysicalParams& p) {
  p.validate();
  return {p.omega_c(), p.s(), p.lambda()};
}

Poly2 GaugeChoice::total_gauge_function(double B) const {
  Poly2 out = phi;
  out.add_term({1, 1}, -0.5 * alpha * B);
  return out;
}

GaugeChoice symmetric_gauge(const Point& x0) { return GaugeChoice{0.0, x0, Poly2{}}; }

GaugeChoice landau_gauge(int axis, const Point& x0) {
  return GaugeChoice{axis == 1 ? 1.0 : -1.0, x0, Poly2{}};
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int max_degree)
      : text_(text), max_degree_(max_degree), result_(max_degree) {}

  Poly2 parse() {
    skip_ws();
    double sign = 1.0;
    // A leading unary sign is accepted so that canonical output round-trips.
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1.0 : 1.0;
      ++pos_;
    }
    term(sign);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      term(c == '-' ? -1.0 : 1.0);
    }
    return result_;
  }

 private:
  void term(double sign) {
    skip_ws();
    double coeff = 1.0;
    Poly2::Exponents e{0, 0};
    if (is_coeff_start()) {
      coeff = number();
    } else {
      factor(e);
    }
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      skip_ws();
      factor(e);
    }
    const int d = e[0] + e[1];
    if (d > max_degree_) throw DegreeOverflow(d, max_degree_);
    result_.add_term(e, sign * coeff);
  }

  void factor(Poly2::Exponents& e) {
    if (peek() != 'u') fail("expected 'u1' or 'u2'");
    ++pos_;
    int var;
    if (peek() == '1')
      var = 0;
    else if (peek() == '2')
      var = 1;
    else
      fail("expected variable index 1 or 2");
    ++pos_;
    skip_ws();
    int power = 1;
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected nonnegative integer exponent");
      auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, power);
      if (ec != std::errc{}) {
        pos_ = start;
        fail("exponent out of range");
      }
    }
    if (e[var] > max_degree_ || power > max_degree_)
      throw DegreeOverflow(std::max(e[var], power), max_degree_);
    e[var] += power;
  }

  bool is_coeff_start() const {
    return !at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.');
  }

  double number() {
    const std::size_t start = pos_;
    bool digits = false;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
      digits = true;
    }
    if (peek() == '.') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        ++pos_;
        digits = true;
      }
    }
    if (!digits) {
      pos_ = start;
      fail("malformed decimal literal");
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t save = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = save;
        fail("malformed exponent in decimal literal");
      }
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    double value = 0.0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{} || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("malformed decimal literal");
    }
    return value;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  int max_degree_;
  Poly2 result_;
};

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

Poly2 parse_poly(std::string_view text, int max_degree) {
  return PolyParser(text, max_degree).parse();
}

std::string to_string(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0.0;
    const double mag = std::abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string body;
    const bool constant = e[0] == 0 && e[1] == 0;
    if (constant || mag != 1.0) body = format_double(mag);
    for (int k = 0; k < 2; ++k) {
      if (e[k] == 0) continue;
      if (!body.empty()) body += "*";
      body += k == 0 ? "u1" : "u2";
      if (e[k] > 1) body += "^" + std::to_string(e[k]);
    }
    out += body;
  }
  return out;
}

std::array<Poly2, 2> vector_potential_poly(const GaugeChoice& g, double B) {
  const Poly2 phibar = g.total_gauge_function(B);
  Poly2 a1 = phibar.derivative(0);
  Poly2 a2 = phibar.derivative(1);
  // symmetric part -B/2 eps_ij u_j, eps_12 = +1
  a1.add_term({0, 1}, -0.5 * B);
  a2.add_term({1, 0}, 0.5 * B);
  return {a1, a2};
}

Eigen::Vector2d vector_potential(const GaugeChoice& g, const PhysicalParams& p,
                                 const Point& x) {
  const auto a = vector_potential_poly(g, p.B);
  return {eval_at(a[0], g.x0, x), eval_at(a[1], g.x0, x)};
}

Poly2 gauge_delta(const GaugeChoice& g_from, const GaugeChoice& g_to, double B) {
  if (g_from.x0 != g_to.x0) throw OriginMismatch();
  return g_to.total_gauge_function(B) - g_from.total_gauge_function(B);
}

}  // namespace landau
