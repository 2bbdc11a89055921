#pragma once

#include <string>

#include "folia/surface.hpp"

namespace folia {

struct RenderConfig {
  int repeat = 3;  // instances drawn per infinite pattern part
  int depth = 4;   // tree depth drawn, root = 1
};

// Strip diagram as SVG 1.1: one rectangle per drawn strip, children stacked
// above their parent over its boundary intervals, infinite patterns elided
// with markers after `repeat` instances, deeper levels cut at `depth`.
// Deterministic for fixed input and config.
std::string render_svg(const TreePtr& tree, const RenderConfig& cfg = {});

// Strips drawn under the same truncation; equals the rectangle count.
int rendered_vertex_count(const TreePtr& tree, const RenderConfig& cfg = {});

}  // namespace folia
