#include "slaumzi/plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "slaumzi/error.hpp"

namespace slaumzi::plot {

namespace {

constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo;
  double hi;
  bool log;

  double map(double v) const {
    const double a = log ? std::log10(v) : v;
    return (a - lo) / (hi - lo);
  }
};

Axis make_axis(const std::vector<const std::vector<double>*>& data, bool log) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto* d : data) {
    for (double v : *d) {
      if (!std::isfinite(v) || (log && v <= 0.0)) continue;
      const double a = log ? std::log10(v) : v;
      lo = std::min(lo, a);
      hi = std::max(hi, a);
    }
  }
  if (!std::isfinite(lo)) lo = 0.0, hi = 1.0;
  if (hi - lo < 1e-300 * std::max(1.0, std::abs(lo))) {
    const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.05;
    lo -= pad;
    hi += pad;
  } else {
    const double pad = 0.04 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
  return {lo, hi, log};
}

std::string tick_label(double a, bool log) {
  return log ? fmt::format("1e{:.3g}", a) : fmt::format("{:.4g}", a);
}

}  // namespace

std::string render_svg(const std::vector<Panel>& panels, int width, int panel_height) {
  detail::require(!panels.empty(), "plot needs at least one panel");
  const int ml = 90, mr = 20, mt = 36, mb = 52;
  const int height = panel_height * static_cast<int>(panels.size());
  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      width, height, width, height);

  for (std::size_t p = 0; p < panels.size(); ++p) {
    const Panel& panel = panels[p];
    const int top = static_cast<int>(p) * panel_height;
    const double x0 = ml, x1 = width - mr, y0 = top + mt, y1 = top + panel_height - mb;

    std::vector<const std::vector<double>*> xs, ys;
    for (const auto& s : panel.series) {
      detail::require(s.x.size() == s.y.size(), "plot series x and y lengths differ");
      xs.push_back(&s.x);
      ys.push_back(&s.y);
    }
    const Axis ax = make_axis(xs, panel.log_x);
    const Axis ay = make_axis(ys, panel.log_y);
    auto px = [&](double v) { return x0 + ax.map(v) * (x1 - x0); };
    auto py = [&](double v) { return y1 - ay.map(v) * (y1 - y0); };

    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
                       width / 2, top + 22, escape(panel.title));
    out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#333\"/>\n",
                       x0, y0, x1 - x0, y1 - y0);
    for (int i = 0; i <= 4; ++i) {
      const double fx = ax.lo + (ax.hi - ax.lo) * i / 4.0;
      const double fy = ay.lo + (ay.hi - ay.lo) * i / 4.0;
      const double gx = x0 + (x1 - x0) * i / 4.0;
      const double gy = y1 - (y1 - y0) * i / 4.0;
      out += fmt::format("<line x1=\"{:.2f}\" y1=\"{}\" x2=\"{:.2f}\" y2=\"{}\" stroke=\"#ddd\"/>\n", gx, y0, gx, y1);
      out += fmt::format("<line x1=\"{}\" y1=\"{:.2f}\" x2=\"{}\" y2=\"{:.2f}\" stroke=\"#ddd\"/>\n", x0, gy, x1, gy);
      out += fmt::format("<text x=\"{:.2f}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", gx, y1 + 16,
                         tick_label(fx, ax.log));
      out += fmt::format("<text x=\"{}\" y=\"{:.2f}\" text-anchor=\"end\">{}</text>\n", x0 - 6, gy + 4,
                         tick_label(fy, ay.log));
    }
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", (x0 + x1) / 2,
                       y1 + 36, escape(panel.x_label));
    out += fmt::format(
        "<text x=\"16\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {})\">{}</text>\n",
        (y0 + y1) / 2, (y0 + y1) / 2, escape(panel.y_label));

    for (std::size_t s = 0; s < panel.series.size(); ++s) {
      const Series& ser = panel.series[s];
      const char* color = kColors[s % std::size(kColors)];
      std::string pts;
      for (std::size_t i = 0; i < ser.x.size(); ++i) {
        if (!std::isfinite(ser.x[i]) || !std::isfinite(ser.y[i])) continue;
        if ((panel.log_x && ser.x[i] <= 0.0) || (panel.log_y && ser.y[i] <= 0.0)) continue;
        if (ser.markers) {
          out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"3\" fill=\"{}\"/>\n", px(ser.x[i]),
                             py(ser.y[i]), color);
        } else {
          pts += fmt::format("{:.2f},{:.2f} ", px(ser.x[i]), py(ser.y[i]));
        }
      }
      if (!pts.empty()) {
        pts.pop_back();
        out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
                           color, pts);
      }
      out += fmt::format("<text x=\"{}\" y=\"{}\" fill=\"{}\">{}</text>\n", x1 - 150,
                         y0 + 16 + 14 * static_cast<int>(s), color, escape(ser.label));
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace slaumzi::plot
