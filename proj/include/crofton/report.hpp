#pragma once

#include <string>

#include <json.hpp>

#include "crofton/identity.hpp"
#include "crofton/montecarlo.hpp"
#include "crofton/predictor.hpp"
#include "crofton/volume.hpp"

namespace crofton {

struct CompareVerdict {
  bool pass = false;
  double predicted = 0.0;
  double mean = 0.0;
  double stderr_ = 0.0;
  double deviation = 0.0;  // |predicted - mean|
  double allowed = 0.0;    // 3 stderr + abs_tol
};

/// Pass iff |prediction - mean| <= 3 stderr + abs_tol.
CompareVerdict report_compare(const Prediction& prediction, const ZeroCountEstimate& estimate, double abs_tol = 1e-9);

nlohmann::json to_json(const IdentityReport& report);
nlohmann::json to_json(const Prediction& prediction);
nlohmann::json to_json(const ZeroCountEstimate& estimate);
nlohmann::json to_json(const CompareVerdict& verdict);
nlohmann::json to_json(const HodgeReport& report);
nlohmann::json to_json(const AlexandrovFenchelReport& report);

/// "sample,count,suspect" rows.
std::string samples_csv(const ZeroCountEstimate& estimate);

/// UTC time, ISO 8601.
std::string timestamp_now();

/// Copy of a report without its "timestamp" field, for reproducibility
/// comparisons.
nlohmann::json without_timestamp(nlohmann::json report);

}  // namespace crofton
