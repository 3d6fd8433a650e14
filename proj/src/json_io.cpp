#include "poz/json_io.hpp"

#include "poz/errors.hpp"

namespace poz {

Json pattern_to_json(const PatternOfZeros& pat) {
  return Json{{"n", pat.n}, {"m", pat.m}, {"S", pat.S}};
}

PatternOfZeros pattern_from_json(const Json& j) {
  if (!j.is_object()) throw PreconditionError("pattern: expected a JSON object");
  for (const char* key : {"n", "m", "S"})
    if (!j.contains(key)) throw PreconditionError(std::string("pattern: missing \"") + key + "\"");
  if (!j["n"].is_number_unsigned() || !j["m"].is_number_unsigned())
    throw PreconditionError("pattern: n and m must be non-negative integers");
  if (!j["S"].is_array()) throw PreconditionError("pattern: S must be an array");
  PatternOfZeros pat;
  pat.n = j["n"].get<std::uint32_t>();
  pat.m = j["m"].get<std::uint32_t>();
  for (const auto& v : j["S"]) {
    if (!v.is_number_integer()) throw PreconditionError("pattern: S entries must be integers");
    pat.S.push_back(v.get<std::int64_t>());
  }
  validate_pattern(pat);
  return pat;
}

void ReportEnvelope::add(AnalysisReport report) {
  pass = pass && report.pass;
  reports.push_back(std::move(report));
}

Json ReportEnvelope::to_json() const {
  Json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["command"] = command;
  j["input_digest"] = input_digest;
  j["pass"] = pass;
  Json rs = Json::array();
  for (const auto& r : reports) rs.push_back(poz::to_json(r));
  j["reports"] = std::move(rs);
  j["result"] = result;
  j["timing"] = {{"elapsed_ms", elapsed_ms}};
  return j;
}

Json error_document(const std::string& command, const std::string& message) {
  Json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["command"] = command;
  j["error"] = {{"kind", "input"}, {"message", message}};
  return j;
}

Json strip_timing(Json document) {
  document.erase("timing");
  return document;
}

} // namespace poz
