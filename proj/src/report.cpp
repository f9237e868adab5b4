#include <json.hpp>

#include "nrt/suites.hpp"

namespace nrt {

std::string write_report(const Report& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["variant"] = to_string(report.variant);
  j["seed"] = report.config.seed;
  j["count"] = report.config.count;
  j["depth"] = report.config.max_level;
  j["cases_run"] = report.cases_run;
  j["passed"] = report.passed;
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    nlohmann::ordered_json entry;
    entry["check"] = f.check;
    entry["inputs"] = f.inputs;
    entry["expected"] = f.expected;
    entry["got"] = f.got;
    failures.push_back(std::move(entry));
  }
  j["failures"] = std::move(failures);
  j["witnesses"] = report.witnesses;
  return j.dump(2) + "\n";
}

}  // namespace nrt
