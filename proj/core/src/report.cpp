#include "zerosum/report.hpp"

#include "json.hpp"

namespace zerosum::verify {

namespace {

nlohmann::ordered_json report_object(const VerificationReport& r, const JsonOptions& options) {
  nlohmann::ordered_json j;
  j["statement_id"] = r.statement_id;
  auto& params = j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.parameters) {
    std::visit([&](const auto& v) { params[key] = v; }, value);
  }
  j["instances_checked"] = r.instances_checked;
  j["raw_instances"] = r.raw_instances;
  j["orbit_reduced"] = r.orbit_reduced;
  j["passed"] = r.passed();
  j["violation_count"] = r.violation_count;
  auto& violations = j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"check", v.check},
                          {"sequence", v.sequence},
                          {"observed", v.observed},
                          {"expected", v.expected}});
  }
  j["slices"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.slices) j["slices"][k] = v;
  j["values"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.values) j["values"][k] = v;
  j["examples"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.examples) j["examples"][k] = v;
  if (options.include_timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

}  // namespace

std::string to_json(const VerificationReport& report, const JsonOptions& options) {
  return report_object(report, options).dump(options.indent);
}

std::string to_json(const std::vector<VerificationReport>& reports, const JsonOptions& options) {
  nlohmann::ordered_json j;
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  j["passed"] = passed;
  j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) j["reports"].push_back(report_object(r, options));
  return j.dump(options.indent);
}

}  // namespace zerosum::verify
