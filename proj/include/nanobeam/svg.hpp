#pragma once

#include <string>
#include <vector>

namespace nanobeam::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct LinePlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<Series> series;
};

struct HeatMap {
  std::string title;
  std::string x_label;  // columns
  std::string y_label;  // rows
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> values;  // row-major, y.size() * x.size(); NaN cells drawn grey
};

/// Standalone SVG documents.
std::string render(const LinePlot& plot);
std::string render(const HeatMap& map);

}  // namespace nanobeam::svg
