#pragma once

#include <string>
#include <vector>

#include "poz/report.hpp"

namespace poz {

/// Names accepted by reproduce_case, in run order.
const std::vector<std::string>& reproduce_cases();

/// Recomputes one worked example and compares every number against its
/// reference value. Throws PreconditionError for an unknown name.
AnalysisReport reproduce_case(const std::string& name);

} // namespace poz
