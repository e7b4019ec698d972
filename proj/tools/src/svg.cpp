#include "harness/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace harness {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

std::string line_chart_svg(const ChartSpec& spec) {
  constexpr double width = 640, height = 480;
  constexpr double ml = 70, mr = 24, mt = 44, mb = 56;
  const double plot_w = width - ml - mr;
  const double plot_h = height - mt - mb;

  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  bool first = true;
  for (const auto& s : spec.series) {
    for (const auto& [x, y] : s.points) {
      if (first) {
        xmin = xmax = x;
        ymin = ymax = y;
        first = false;
      }
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  ymin = std::min(ymin, 0.0);
  if (xmax <= xmin) xmax = xmin + 1.0;
  if (ymax <= ymin) ymax = ymin + 1.0;
  ymax += 0.06 * (ymax - ymin);

  auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * plot_w; };
  auto py = [&](double y) { return height - mb - (y - ymin) / (ymax - ymin) * plot_h; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
         num(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(width / 2) + "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" + spec.title + "</text>\n";

  // axes with five ticks per side
  svg += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  svg += "<path d=\"M" + num(ml) + " " + num(mt) + " L" + num(ml) + " " +
         num(height - mb) + " L" + num(width - mr) + " " + num(height - mb) + "\"/>\n";
  svg += "</g>\n";
  svg += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 5.0;
    const double fy = ymin + (ymax - ymin) * i / 5.0;
    svg += "<line x1=\"" + num(px(fx)) + "\" y1=\"" + num(height - mb) + "\" x2=\"" +
           num(px(fx)) + "\" y2=\"" + num(height - mb + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(px(fx)) + "\" y=\"" + num(height - mb + 18) +
           "\" text-anchor=\"middle\">" + num(fx) + "</text>\n";
    svg += "<line x1=\"" + num(ml - 5) + "\" y1=\"" + num(py(fy)) + "\" x2=\"" +
           num(ml) + "\" y2=\"" + num(py(fy)) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(ml - 8) + "\" y=\"" + num(py(fy) + 4) +
           "\" text-anchor=\"end\">" + num(fy) + "</text>\n";
  }
  svg += "<text x=\"" + num(ml + plot_w / 2) + "\" y=\"" + num(height - 12) +
         "\" text-anchor=\"middle\" font-size=\"13\">" + spec.x_label + "</text>\n";
  svg += "<text x=\"16\" y=\"" + num(mt + plot_h / 2) +
         "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 " +
         num(mt + plot_h / 2) + ")\">" + spec.y_label + "</text>\n";
  svg += "</g>\n";

  for (const auto& m : spec.markers) {
    svg += "<line x1=\"" + num(px(m.x)) + "\" y1=\"" + num(mt) + "\" x2=\"" +
           num(px(m.x)) + "\" y2=\"" + num(height - mb) +
           "\" stroke=\"gray\" stroke-dasharray=\"5,4\"/>\n";
    svg += "<text x=\"" + num(px(m.x)) + "\" y=\"" + num(mt - 6) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
           m.label + "</text>\n";
  }

  double legend_y = mt + 14;
  for (const auto& s : spec.series) {
    std::string pts;
    for (const auto& [x, y] : s.points) {
      if (!pts.empty()) pts += ' ';
      pts += num(px(x)) + "," + num(py(y));
    }
    svg += "<polyline fill=\"none\" stroke=\"" + s.color +
           "\" stroke-width=\"1.8\" points=\"" + pts + "\"/>\n";
    const double lx = width - mr - 150;
    svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(legend_y - 4) + "\" x2=\"" +
           num(lx + 24) + "\" y2=\"" + num(legend_y - 4) + "\" stroke=\"" + s.color +
           "\" stroke-width=\"1.8\"/>\n";
    svg += "<text x=\"" + num(lx + 30) + "\" y=\"" + num(legend_y) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + s.label + "</text>\n";
    legend_y += 16;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace harness
