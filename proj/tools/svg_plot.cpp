#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lta::plot {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 160.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string color(std::size_t i) { return kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))]; }

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  std::ostringstream ss;
  ss.precision(6);
  ss << v;
  return ss.str();
}

struct Frame {
  double x0, x1, y0, y1;
  double px(double x) const { return kLeft + (x - x0) / (x1 - x0) * (kWidth - kLeft - kRight); }
  double py(double y) const { return kHeight - kBottom - (y - y0) / (y1 - y0) * (kHeight - kTop - kBottom); }
};

void header(std::ostringstream& svg, const std::string& title) {
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << escape(title) << "</text>\n";
}

void axes(std::ostringstream& svg, const Frame& f, const std::string& x_label, const std::string& y_label, bool x_ticks) {
  const double right = kWidth - kRight;
  const double bottom = kHeight - kBottom;
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << bottom << "\" x2=\"" << right << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double y = f.y0 + (f.y1 - f.y0) * t / 4.0;
    svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << f.py(y) + 4 << "\" text-anchor=\"end\">" << num(y) << "</text>\n";
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << f.py(y) << "\" x2=\"" << right << "\" y2=\"" << f.py(y)
        << "\" stroke=\"#dddddd\"/>\n";
    if (x_ticks) {
      const double x = f.x0 + (f.x1 - f.x0) * t / 4.0;
      svg << "<text x=\"" << f.px(x) << "\" y=\"" << bottom + 16 << "\" text-anchor=\"middle\">" << num(x) << "</text>\n";
    }
  }
  svg << "<text x=\"" << (kLeft + right) / 2 << "\" y=\"" << kHeight - 16 << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n";
  svg << "<text transform=\"translate(18," << (kTop + bottom) / 2 << ") rotate(-90)\" text-anchor=\"middle\">" << escape(y_label)
      << "</text>\n";
}

void legend(std::ostringstream& svg, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const double y = kTop + 18.0 * static_cast<double>(i);
    svg << "<rect x=\"" << kWidth - kRight + 12 << "\" y=\"" << y << "\" width=\"12\" height=\"12\" fill=\"" << color(i) << "\"/>\n";
    svg << "<text x=\"" << kWidth - kRight + 30 << "\" y=\"" << y + 10 << "\">" << escape(labels[i]) << "</text>\n";
  }
}

}  // namespace

std::string line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                       const std::vector<Series>& series) {
  Frame f{0.0, 1.0, 0.0, 1.0};
  bool first = true;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (first) {
        f = {s.x[i], s.x[i], s.y[i], s.y[i]};
        first = false;
      }
      f.x0 = std::min(f.x0, s.x[i]);
      f.x1 = std::max(f.x1, s.x[i]);
      f.y0 = std::min(f.y0, s.y[i]);
      f.y1 = std::max(f.y1, s.y[i]);
    }
  }
  if (f.x1 <= f.x0) f.x1 = f.x0 + 1.0;
  if (f.y1 <= f.y0) f.y1 = f.y0 + 1e-3;
  const double pad = 0.05 * (f.y1 - f.y0);
  f.y0 -= pad;
  f.y1 += pad;

  std::ostringstream svg;
  header(svg, title);
  axes(svg, f, x_label, y_label, true);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < series.size(); ++k) {
    svg << "<polyline fill=\"none\" stroke=\"" << color(k) << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < series[k].x.size(); ++i) {
      svg << num(f.px(series[k].x[i])) << ',' << num(f.py(series[k].y[i])) << ' ';
    }
    svg << "\"/>\n";
    labels.push_back(series[k].label);
  }
  legend(svg, labels);
  svg << "</svg>\n";
  return svg.str();
}

std::string bar_chart(const std::string& title, const std::string& y_label, const std::vector<std::string>& methods,
                      const std::vector<BarGroup>& groups) {
  double top = 0.0;
  for (const auto& g : groups) {
    for (double v : g.values) top = std::max(top, v);
  }
  Frame f{0.0, 1.0, 0.0, top > 0.0 ? top * 1.05 : 1.0};
  std::ostringstream svg;
  header(svg, title);
  axes(svg, f, "", y_label, false);
  const double span = kWidth - kLeft - kRight;
  const double group_width = groups.empty() ? span : span / static_cast<double>(groups.size());
  const double bar_width = 0.8 * group_width / static_cast<double>(std::max<std::size_t>(methods.size(), 1));
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const double gx = kLeft + group_width * static_cast<double>(g) + 0.1 * group_width;
    for (std::size_t k = 0; k < groups[g].values.size(); ++k) {
      const double v = groups[g].values[k];
      const double x = gx + bar_width * static_cast<double>(k);
      svg << "<rect x=\"" << num(x) << "\" y=\"" << num(f.py(v)) << "\" width=\"" << num(bar_width) << "\" height=\""
          << num(f.py(0.0) - f.py(v)) << "\" fill=\"" << color(k) << "\"><title>" << escape(methods[k]) << ": "
          << num(v) << "</title></rect>\n";
    }
    svg << "<text x=\"" << num(gx + 0.4 * group_width) << "\" y=\"" << kHeight - kBottom + 16
        << "\" text-anchor=\"middle\" font-size=\"10\">" << escape(groups[g].label) << "</text>\n";
  }
  legend(svg, methods);
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace lta::plot
