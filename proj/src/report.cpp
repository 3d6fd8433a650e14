#include "poz/report.hpp"

#include "poz/errors.hpp"

namespace poz {

Check& AnalysisReport::add(std::string name, bool ok, Json detail, std::string tag) {
  if (!ok && tag != "conjectural" && tag != "informational") pass = false;
  checks.push_back({std::move(name), ok, std::move(tag), std::move(detail)});
  return checks.back();
}

const Check* AnalysisReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool AnalysisReport::verdict(const std::string& name) const {
  const Check* c = find(name);
  if (!c) throw Error("report '" + subject + "' has no check named '" + name + "'");
  return c->pass;
}

Json to_json(const AnalysisReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    if (!c.tag.empty()) j["tag"] = c.tag;
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  Json out;
  out["subject"] = report.subject;
  out["pass"] = report.pass;
  out["checks"] = std::move(checks);
  if (!report.data.empty()) out["data"] = report.data;
  return out;
}

} // namespace poz
