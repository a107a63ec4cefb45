#pragma once

#include <string>
#include <utility>
#include <vector>

namespace htube::svg {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
  std::string color = "#c0392b";
  bool markers = false;  // draw dots instead of a polyline
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  int width = 720;
  int height = 540;
  bool equal_aspect = false;
  std::vector<Series> series;
};

/// Self-contained SVG with axes, ticks and one polyline per series.
/// Coordinates are printed at fixed precision, so output is byte-stable.
std::string render(const Plot& plot);

}  // namespace htube::svg
