#include "lipscomb/export.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "lipscomb/error.hpp"

namespace lipscomb {

namespace {

std::string decimal(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

nlohmann::json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<long>(z.get_si());
  return z.get_str();
}

nlohmann::json fraction_json(const Rational& q) {
  return {{"num", integer_json(q.get_num())}, {"den", integer_json(q.get_den())}};
}

}  // namespace

std::string to_csv(const EmbeddingConfig& cfg, const PointCloud& cloud) {
  std::string out;
  for (std::size_t k = 0; k < cloud.dim(); ++k) {
    if (k) out += ',';
    out += cfg.graph().label(cfg.coordinate_symbol(k));
  }
  out += '\n';
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    for (std::size_t k = 0; k < cloud.dim(); ++k) {
      if (k) out += ',';
      out += decimal(cloud.coordinate(i, k), 17);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const EmbeddingConfig& cfg, const PointCloud& cloud) {
  nlohmann::json doc;
  nlohmann::json coords = nlohmann::json::array();
  for (std::size_t k = 0; k < cloud.dim(); ++k)
    coords.push_back(cfg.graph().label(cfg.coordinate_symbol(k)));
  doc["coordinates"] = coords;
  doc["z"] = cfg.graph().label(cfg.z());
  doc["depth"] = cloud.depth();
  doc["error_bound"] = fraction_json(cloud.error_bound());
  nlohmann::json points = nlohmann::json::array();
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    nlohmann::json p = nlohmann::json::array();
    for (std::size_t k = 0; k < cloud.dim(); ++k)
    {
      Rational q(Integer(static_cast<long>(cloud.row(i)[k])), Integer(static_cast<long>(cloud.denominator())));
      q.canonicalize();
      p.push_back(fraction_json(q));
    }
    points.push_back(std::move(p));
  }
  doc["points"] = std::move(points);
  return doc.dump() + "\n";
}

std::string to_text(const EmbeddingConfig& cfg, const PointCloud& cloud) {
  std::string out;
  for (const auto& p : cloud.points()) out += format_point(cfg, p) + "\n";
  return out;
}

std::string render_svg(const PointCloud& cloud, const SvgOptions& options) {
  const std::size_t dim = cloud.dim();
  if (dim < 1 || dim > 3)
    throw InvalidInput("svg rendering supports 1, 2 or 3 coordinates, got " + std::to_string(dim));
  std::size_t ax = 0, ay = 1;
  if (dim == 3) {
    ax = options.axes[0];
    ay = options.axes[1];
    if (ax >= 3 || ay >= 3 || ax == ay) throw InvalidInput("projection axes must be two distinct coordinates");
  }
  const double margin = 0.05;
  const double height_units = dim == 1 ? 2 * margin : 1 + 2 * margin;
  const double width_units = 1 + 2 * margin;
  const double radius = std::ldexp(1.0, -static_cast<int>(cloud.depth()) - 1);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + decimal(options.size, 10) +
         "\" height=\"" + decimal(options.size * height_units / width_units, 10) + "\" viewBox=\"" +
         decimal(-margin, 10) + " " + decimal(-margin, 10) + " " + decimal(width_units, 10) + " " +
         decimal(height_units, 10) + "\">\n";
  out += "<rect x=\"" + decimal(-margin, 10) + "\" y=\"" + decimal(-margin, 10) + "\" width=\"" +
         decimal(width_units, 10) + "\" height=\"" + decimal(height_units, 10) + "\" fill=\"white\"/>\n";
  out += "<g fill=\"black\">\n";
  const std::string r = decimal(radius, 10);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    double x = cloud.coordinate(i, dim == 1 ? 0 : ax);
    // SVG y grows downwards.
    double y = dim == 1 ? 0.0 : 1.0 - cloud.coordinate(i, ay);
    out += "<circle cx=\"" + decimal(x, 10) + "\" cy=\"" + decimal(y, 10) + "\" r=\"" + r + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace lipscomb
