#pragma once

// Deterministic text output: shortest round-trip decimals, CSV rows, and a
// minimal SVG polyline document.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "zitterlab/errors.hpp"

namespace zitterlab {

/// Shortest decimal that reads back to exactly the same double.
inline std::string format_double(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) throw Error(ErrorCode::InvalidArgument, "number formatting failed");
  return std::string(buf, end);
}

inline void write_csv_row(std::ostream& os, std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << format_double(values[i]);
  }
  os << '\n';
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  return os;
}

/// x1-x2 projection of a worldline as a single polyline.
inline void write_svg_polyline(std::ostream& os, const std::vector<std::pair<double, double>>& points,
                               std::string_view title) {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  for (const auto& [x, y] : points) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  if (points.empty()) xmin = xmax = ymin = ymax = 0.0;
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double pad = 0.05 * span;
  const double size = 600.0;
  const double scale = size / (span + 2.0 * pad);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  os << "<title>" << title << "</title>\n";
  os << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  os << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1\" points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double px = (points[i].first - xmin + pad) * scale;
    const double py = size - (points[i].second - ymin + pad) * scale;
    if (i) os << ' ';
    os << format_double(px) << ',' << format_double(py);
  }
  os << "\"/>\n</svg>\n";
}

}  // namespace zitterlab
