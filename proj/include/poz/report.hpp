#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace poz {

using Json = nlohmann::ordered_json;

/// One verdict inside an AnalysisReport.
struct Check {
  std::string name;
  bool pass = false;
  /// "theorem-backed", "conjectural", "precondition", "informational" or
  /// empty.
  std::string tag;
  Json detail = Json::object();
};

/// Structured checker output. `pass` is the conjunction of every check not
/// tagged "conjectural" or "informational".
struct AnalysisReport {
  std::string subject;
  bool pass = true;
  std::vector<Check> checks;
  Json data = Json::object();

  Check& add(std::string name, bool ok, Json detail = Json::object(), std::string tag = {});
  const Check* find(const std::string& name) const;
  bool verdict(const std::string& name) const;
};

Json to_json(const AnalysisReport& report);

} // namespace poz
