#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "nlvirial/errors.hpp"

namespace nlvirial {

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
  bool markers = false;  ///< circles instead of a polyline
};

/// Minimal static SVG line chart: one frame, tick labels at the corners, a
/// legend, and one polyline (or marker set) per series.
inline std::string render_svg(const std::vector<PlotSeries>& series, const std::string& x_label,
                              const std::string& y_label) {
  constexpr double width = 640, height = 480, margin = 60;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  if (!(ymax > ymin)) ymax = ymin + 1.0;
  auto px = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin); };
  auto py = [&](double y) { return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin); };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  std::string out;
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                width, height, width, height);
  out += buf;
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf, "<rect x=\"%.0f\" y=\"%.0f\" width=\"%.0f\" height=\"%.0f\" fill=\"none\" stroke=\"black\"/>\n",
                margin, margin, width - 2 * margin, height - 2 * margin);
  out += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.0f\" y=\"%.0f\" font-size=\"12\">%.4g</text>\n"
                "<text x=\"%.0f\" y=\"%.0f\" font-size=\"12\" text-anchor=\"end\">%.4g</text>\n"
                "<text x=\"%.0f\" y=\"%.0f\" font-size=\"12\" text-anchor=\"end\">%.4g</text>\n"
                "<text x=\"%.0f\" y=\"%.0f\" font-size=\"12\" text-anchor=\"end\">%.4g</text>\n",
                margin, height - margin + 16, xmin, width - margin, height - margin + 16, xmax, margin - 4,
                height - margin, ymin, margin - 4, margin + 4, ymax);
  out += buf;
  std::snprintf(buf, sizeof buf, "<text x=\"%.0f\" y=\"%.0f\" font-size=\"14\" text-anchor=\"middle\">%s</text>\n",
                width / 2, height - 16, x_label.c_str());
  out += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"16\" y=\"%.0f\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 16 %.0f)\">%s</text>\n",
                height / 2, height / 2, y_label.c_str());
  out += buf;

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = colors[i % std::size(colors)];
    const auto& s = series[i];
    if (s.markers) {
      for (const auto& [x, y] : s.points) {
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"none\" stroke=\"%s\"/>\n", px(x),
                      py(y), color);
        out += buf;
      }
    } else {
      std::snprintf(buf, sizeof buf, "<polyline fill=\"none\" stroke=\"%s\" stroke-width=\"1.5\" points=\"", color);
      out += buf;
      for (const auto& [x, y] : s.points) {
        std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(x), py(y));
        out += buf;
      }
      out += "\"/>\n";
    }
    std::snprintf(buf, sizeof buf, "<text x=\"%.0f\" y=\"%.0f\" font-size=\"12\" fill=\"%s\">%s</text>\n",
                  width - margin - 110, margin + 18.0 + 16.0 * i, color, s.label.c_str());
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

inline void write_svg(const std::string& path, const std::vector<PlotSeries>& series, const std::string& x_label,
                      const std::string& y_label) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw precondition_error("cannot open plot file " + path);
  file << render_svg(series, x_label, y_label);
  if (!file) throw numerical_error("failed writing plot file " + path);
}

}  // namespace nlvirial
