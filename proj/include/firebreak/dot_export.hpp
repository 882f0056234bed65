#pragma once

#include <string>

#include "firebreak/instance_io.hpp"

namespace firebreak {

// Presentation-only DOT rendering: burning vertices (ignition 1) are
// filled, cut edges dashed. Never parsed back.
std::string export_dot(const LoadedInstance& inst, const CutSystem* cut = nullptr);

}  // namespace firebreak
