#pragma once

#include "su2cyc/slope.hpp"

#include <optional>
#include <string>
#include <utility>

namespace su2cyc {

struct DrawSpec {
  std::optional<Slope> a;
  std::optional<Slope> b;
  bool path = false;      // broken line L
  bool interior = false;  // L pushed into the open strip
  bool sheared = false;   // sheared path and the g2 graph, in the shifted frame
  std::optional<std::pair<std::int64_t, std::int64_t>> torus_knot;  // overlay its arcs
  bool mirror = false;
  int width = 720;
  int height = 360;
};

/// Deterministic SVG of the strip with the requested overlays.
std::string render_pillowcase(const DrawSpec& spec);

}  // namespace su2cyc
