#pragma once

#include <string>
#include <string_view>

#include "cycleforge/constructors.hpp"

namespace cycleforge {

// Text format:
//   cycleforge-origin 1
//   <order> <host_order> <fiber_order>
//   <h_vertex> <i> <j>        (one line per vertex, j = -1 when untouched)
std::string to_origin_text(const VertexOrigin& origin);
VertexOrigin from_origin_text(std::string_view text);

}  // namespace cycleforge
