#pragma once

#include <string>
#include <utility>
#include <vector>

namespace harness {

// Minimal self-contained SVG line charts, rendered purely from the data that
// also went into the CSVs.

struct Series {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;
};

struct Marker {  // dashed vertical guide with a label at the axis
  double x;
  std::string label;
};

struct ChartSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  std::vector<Marker> markers;
};

std::string line_chart_svg(const ChartSpec& spec);

}  // namespace harness
