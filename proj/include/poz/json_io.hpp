#pragma once

#include <string>
#include <vector>

#include "poz/pattern.hpp"
#include "poz/report.hpp"

namespace poz {

inline constexpr const char* kToolName = "pozcli";
inline constexpr const char* kToolVersion = "0.1.0";

/// {"n": n, "m": m, "S": [...]}
Json pattern_to_json(const PatternOfZeros& pat);
/// Throws PreconditionError on malformed input.
PatternOfZeros pattern_from_json(const Json& j);

/// Top-level CLI document. Everything except "timing" is deterministic for a
/// fixed command line and input.
struct ReportEnvelope {
  std::string command;
  std::string input_digest;
  bool pass = true;
  std::vector<AnalysisReport> reports;
  Json result = Json::object();
  double elapsed_ms = 0;

  void add(AnalysisReport report);
  Json to_json() const;
};

/// Envelope for input errors: {"tool", "command", "error"}.
Json error_document(const std::string& command, const std::string& message);

/// Copy of a CLI document without its timing field.
Json strip_timing(Json document);

} // namespace poz
