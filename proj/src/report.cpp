#include "crofton/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <sstream>

namespace crofton {

namespace {

// JSON has no infinity or NaN; both become null.
nlohmann::json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

CompareVerdict report_compare(const Prediction& prediction, const ZeroCountEstimate& estimate, double abs_tol) {
  CompareVerdict v;
  v.predicted = prediction.value;
  v.mean = estimate.mean;
  v.stderr_ = estimate.stderr_;
  v.deviation = std::abs(v.predicted - v.mean);
  v.allowed = 3.0 * v.stderr_ + abs_tol;
  v.pass = v.deviation <= v.allowed;
  return v;
}

nlohmann::json to_json(const IdentityReport& r) {
  return {{"identity", r.identity}, {"lhs", number(r.lhs)},
          {"rhs", number(r.rhs)},   {"stderr", number(r.stderr_)},
          {"samples", r.samples},   {"tol", r.tol},
          {"relative_deviation", number(r.relative_deviation())},
          {"pass", r.pass}};
}

nlohmann::json to_json(const Prediction& p) {
  nlohmann::json stats = nlohmann::json::object();
  if (!p.node_mixed_volume.empty()) {
    const auto [lo, hi] = std::minmax_element(p.node_mixed_volume.begin(), p.node_mixed_volume.end());
    double sum = 0.0;
    for (double v : p.node_mixed_volume) sum += v;
    stats = {{"min", *lo}, {"max", *hi}, {"mean", sum / static_cast<double>(p.node_mixed_volume.size())}};
  }
  return {{"value", number(p.value)}, {"method", p.method}, {"nodes", p.nodes}, {"per_node_stats", stats},
          {"inputs", p.inputs}};
}

nlohmann::json to_json(const ZeroCountEstimate& e) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [count, n] : e.histogram) hist[std::to_string(count)] = n;
  return {{"samples", e.samples},
          {"valid_samples", e.valid_samples},
          {"mean", number(e.mean)},
          {"stderr", number(e.stderr_)},
          {"seed", e.seed},
          {"histogram", hist},
          {"suspect_samples", e.suspect_samples}};
}

nlohmann::json to_json(const CompareVerdict& v) {
  return {{"predicted", number(v.predicted)}, {"mean", number(v.mean)},       {"stderr", number(v.stderr_)},
          {"deviation", number(v.deviation)}, {"allowed", number(v.allowed)}, {"pass", v.pass}};
}

nlohmann::json to_json(const HodgeReport& r) {
  nlohmann::json j = {{"identity", "hodge"},
                      {"lhs", number(r.lhs)},
                      {"rhs", number(r.rhs)},
                      {"holds", r.holds},
                      {"corollary_lhs", number(r.corollary_lhs)},
                      {"corollary_rhs", number(r.corollary_rhs)},
                      {"corollary_holds", r.corollary_holds},
                      {"invariant", r.invariant},
                      {"equality_expected", r.equality_expected},
                      {"equality", r.equality},
                      {"pass", r.pass}};
  if (!r.advisory.empty()) j["advisory"] = r.advisory;
  return j;
}

nlohmann::json to_json(const AlexandrovFenchelReport& r) {
  return {{"identity", "af"}, {"lhs", number(r.lhs)}, {"rhs", number(r.rhs)}, {"pass", r.holds}};
}

std::string samples_csv(const ZeroCountEstimate& e) {
  std::ostringstream out;
  out << "sample,count,suspect\n";
  for (std::size_t i = 0; i < e.counts.size(); ++i) {
    out << i << "," << e.counts[i] << "," << (i < e.suspects.size() && e.suspects[i] ? 1 : 0) << "\n";
  }
  return out.str();
}

std::string timestamp_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json without_timestamp(nlohmann::json report) {
  if (report.is_object()) report.erase("timestamp");
  return report;
}

}  // namespace crofton
