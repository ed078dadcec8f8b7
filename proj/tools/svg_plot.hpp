#pragma once

#include <string>
#include <vector>

namespace lta::plot {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Polyline chart with labelled axes.
std::string line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                       const std::vector<Series>& series);

struct BarGroup {
  std::string label;
  std::vector<double> values;  // one per method
};

/// Grouped bars; `methods` names the bars inside every group.
std::string bar_chart(const std::string& title, const std::string& y_label, const std::vector<std::string>& methods,
                      const std::vector<BarGroup>& groups);

}  // namespace lta::plot
