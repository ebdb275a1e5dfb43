#pragma once

#include <string>
#include <vector>

#include "vfbound/harness.hpp"

namespace vfbound {

/// Scatter-and-line SVG of empirical_c against n, one series per family.
std::string empirical_c_svg(const std::vector<InstanceReport>& reports);

}  // namespace vfbound
