#include "landau/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>

namespace landau {

VerificationReport::VerificationReport(std::string campaign, const PhysicalParams& params,
                                       std::vector<GaugeChoice> gauges,
                                       const RunSettings& settings)
    : campaign_(std::move(campaign)),
      params_(params),
      gauges_(std::move(gauges)),
      settings_(settings) {}

void VerificationReport::check(const std::string& id, double deviation, double tolerance) {
  checks_.push_back({id, deviation, tolerance, std::isfinite(deviation) && deviation <= tolerance});
}

void VerificationReport::check_exceeds(const std::string& id, double value, double bound) {
  checks_.push_back({id, value, bound, std::isfinite(value) && value > bound});
}

void VerificationReport::fail(const std::string& id, double deviation, double tolerance) {
  checks_.push_back({id, deviation, tolerance, false});
}

bool VerificationReport::pass() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

const CheckRecord* VerificationReport::find(const std::string& id) const {
  for (const auto& c : checks_)
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

nlohmann::json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

double number_from(const nlohmann::json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

}  // namespace

nlohmann::json VerificationReport::to_json(const std::optional<std::string>& timestamp) const {
  nlohmann::json j;
  j["campaign"] = campaign_;
  j["params"] = {{"m", params_.m},           {"q", params_.q},
                 {"B", params_.B},           {"hbar", params_.hbar},
                 {"omega_c", params_.omega_c()}, {"s", params_.s()}};
  j["gauges"] = nlohmann::json::array();
  for (const auto& g : gauges_)
    j["gauges"].push_back(
        {{"alpha", g.alpha}, {"phi", to_string(g.phi)}, {"x0", {g.x0.x(), g.x0.y()}}});
  j["settings"] = {{"nmax", settings_.nmax},
                   {"margin", settings_.margin},
                   {"grid", settings_.grid},
                   {"scheme", std::string(name_of(settings_.scheme))},
                   {"seed", settings_.seed}};
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks_)
    j["checks"].push_back({{"id", c.id},
                           {"deviation", number_or_null(c.deviation)},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
  j["pass"] = pass();
  if (timestamp) j["timestamp"] = *timestamp;
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.campaign_ = j.at("campaign").get<std::string>();
  const auto& p = j.at("params");
  r.params_ = {p.at("m").get<double>(), p.at("q").get<double>(), p.at("B").get<double>(),
               p.at("hbar").get<double>()};
  for (const auto& g : j.at("gauges")) {
    GaugeChoice gc;
    gc.alpha = g.at("alpha").get<double>();
    gc.phi = parse_poly(g.at("phi").get<std::string>());
    gc.x0 = Point(g.at("x0").at(0).get<double>(), g.at("x0").at(1).get<double>());
    r.gauges_.push_back(gc);
  }
  const auto& s = j.at("settings");
  r.settings_ = {s.at("nmax").get<int>(), s.at("margin").get<int>(), s.at("grid").get<int>(),
                 scheme_from_name(s.at("scheme").get<std::string>()),
                 s.at("seed").get<std::uint64_t>()};
  for (const auto& c : j.at("checks"))
    r.checks_.push_back({c.at("id").get<std::string>(), number_from(c.at("deviation")),
                         c.at("tolerance").get<double>(), c.at("pass").get<bool>()});
  return r;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace landau
