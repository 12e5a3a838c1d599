#pragma once

// Static SVG drawing of an instance: one circle per voter location, colored
// by town kind when a layout is given, plus one filled hull per district.

#include <string>

#include "redist/populate.hpp"
#include "redist/towns.hpp"
#include "redist/verify.hpp"

namespace redist {

struct RenderOptions {
  const TownLayout* layout = nullptr;  // kinds for coloring; must match the instance
  const Districting* dist = nullptr;
  double width = 900;  // pixels; height follows the aspect ratio
};

/// Deterministic output. Circles carry class="town" and hulls class="district",
/// so element counts can be checked by a parser.
std::string render_svg(const RedistrictingInstance& inst, const RenderOptions& opt = {});

}  // namespace redist
