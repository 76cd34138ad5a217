#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace landau {

/// Polynomial text did not match the grammar; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DegreeOverflow : public std::runtime_error {
 public:
  DegreeOverflow(int degree, int max_degree)
      : std::runtime_error("total degree " + std::to_string(degree) +
                           " exceeds bound " + std::to_string(max_degree)),
        degree_(degree),
        max_degree_(max_degree) {}

  int degree() const noexcept { return degree_; }
  int max_degree() const noexcept { return max_degree_; }

 private:
  int degree_;
  int max_degree_;
};

class OriginMismatch : public std::invalid_argument {
 public:
  OriginMismatch() : std::invalid_argument("gauges do not share the origin x0") {}
};

/// An operator or comparison needs more ladder headroom than the basis (or margin) gives.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownName : public std::invalid_argument {
 public:
  explicit UnknownName(const std::string& name)
      : std::invalid_argument("unknown name '" + name + "'") {}
};

/// Integrand has not decayed at the edge of the quadrature grid.
class SupportOverflow : public std::runtime_error {
 public:
  SupportOverflow(double boundary, double peak)
      : std::runtime_error("integrand not contained in grid support (boundary " +
                           std::to_string(boundary) + ", peak " + std::to_string(peak) +
                           ")"),
        boundary_(boundary),
        peak_(peak) {}

  double boundary() const noexcept { return boundary_; }
  double peak() const noexcept { return peak_; }

 private:
  double boundary_;
  double peak_;
};

}  // namespace landau
