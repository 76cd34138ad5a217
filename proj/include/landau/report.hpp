#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "landau/params.hpp"
#include "landau/quadrature.hpp"

namespace landau {

struct CheckRecord {
  std::string id;
  /// NaN when no deviation could be computed (serialised as null).
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct RunSettings {
  int nmax = 16;
  int margin = 3;
  int grid = 80;
  Scheme scheme = Scheme::gauss_hermite;
  std::uint64_t seed = 1;

  friend bool operator==(const RunSettings&, const RunSettings&) = default;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  VerificationReport(std::string campaign, const PhysicalParams& params,
                     std::vector<GaugeChoice> gauges, const RunSettings& settings);

  /// Passes when deviation <= tolerance.
  void check(const std::string& id, double deviation, double tolerance);
  /// Passes when value > bound; records value as the deviation.
  void check_exceeds(const std::string& id, double value, double bound);
  /// Always fails.
  void fail(const std::string& id, double deviation, double tolerance);

  bool pass() const;
  const std::string& campaign() const { return campaign_; }
  const PhysicalParams& params() const { return params_; }
  const std::vector<GaugeChoice>& gauges() const { return gauges_; }
  const RunSettings& settings() const { return settings_; }
  const std::vector<CheckRecord>& checks() const { return checks_; }
  const CheckRecord* find(const std::string& id) const;

  /// The timestamp, when given, is an extra top-level field.
  nlohmann::json to_json(const std::optional<std::string>& timestamp = std::nullopt) const;
  static VerificationReport from_json(const nlohmann::json& j);

 private:
  std::string campaign_;
  PhysicalParams params_;
  std::vector<GaugeChoice> gauges_;
  RunSettings settings_;
  std::vector<CheckRecord> checks_;
};

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

}  // namespace landau
