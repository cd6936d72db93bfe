#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "lipscomb/embedding.hpp"
#include "lipscomb/point_cloud.hpp"

namespace lipscomb {

// Header row of coordinate symbols, then one row per point with 17
// significant digits.
std::string to_csv(const EmbeddingConfig& cfg, const PointCloud& cloud);

// Exact coordinates as {"num": .., "den": ..} pairs. Integers outside int64
// are written as decimal strings.
std::string to_json(const EmbeddingConfig& cfg, const PointCloud& cloud);

// One format_point line per point.
std::string to_text(const EmbeddingConfig& cfg, const PointCloud& cloud);

struct SvgOptions {
  double size = 512;
  // Coordinates drawn on the horizontal and vertical axis for 3-D clouds.
  std::array<std::size_t, 2> axes{0, 1};
};

// Scatter plot over the unit box with a 5% margin, one circle per point with
// radius 2^-(depth+1). Throws InvalidInput unless the dimension is 1, 2 or 3.
std::string render_svg(const PointCloud& cloud, const SvgOptions& options = {});

}  // namespace lipscomb
