#pragma once

#include <string>
#include <vector>

#include "arquiver/derived.hpp"

namespace arq {

// Declarative description of a strip picture.
struct Scene {
  const Quiver* quiver = nullptr;
  struct Mark {
    DObject object;
    std::string label;
  };
  std::vector<Mark> marks;
  std::vector<LambdaKey> lambda_graphs;
  std::vector<DObject> hom_regions;
  struct RectOverlay {
    DObject left, right;
  };
  std::vector<RectOverlay> rects;
  // x window; when empty (lo >= hi) a window is derived from the content
  double window_lo = 0.0;
  double window_hi = 0.0;
};

// Deterministic SVG text: stable element order, 6-decimal coordinates.
std::string render_svg(const Scene& scene);

}  // namespace arq
