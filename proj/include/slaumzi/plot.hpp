#pragma once

#include <string>
#include <vector>

// Static SVG line charts. Output depends only on the input values, so
// identical data gives byte-identical files.

namespace slaumzi::plot {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool markers = false;  // draw points instead of a line
};

struct Panel {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<Series> series;
};

// Panels are stacked vertically in one figure.
std::string render_svg(const std::vector<Panel>& panels, int width = 720, int panel_height = 360);

}  // namespace slaumzi::plot
