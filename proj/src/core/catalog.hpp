#pragma once

#include <string>
#include <vector>

#include "core/powersys.hpp"

namespace gegmra {

/// Scenario catalog persistence (JSON). Each entry carries the fault type,
/// location fraction, inception instant in cycles and fault resistance;
/// source parameters may be overridden at the catalog level.
std::vector<FaultScenario> read_catalog(const std::string& path);
void write_catalog(const std::vector<FaultScenario>& catalog, const std::string& path);

}  // namespace gegmra
