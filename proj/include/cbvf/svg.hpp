#pragma once

#include <string>
#include <vector>

#include "cbvf/level_set.hpp"

namespace cbvf {

struct PlotLayer {
  enum class Kind { kPolyline, kTrajectory, kMarker, kAxes };

  Kind kind = Kind::kPolyline;
  std::string name;             // legend label
  std::vector<Point2> points;   // polyline/trajectory vertices, or the marker position
  bool closed = false;
  // kAxes only: data bounds and axis titles.
  double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
  std::string x_label, y_label;
};

PlotLayer axes_layer(double x_min, double x_max, double y_min, double y_max,
                     std::string x_label, std::string y_label);
PlotLayer polyline_layer(std::string name, const LevelSetPolyline& line);
PlotLayer trajectory_layer(std::string name, std::vector<Point2> points);
PlotLayer marker_layer(std::string name, Point2 at);

// Standalone SVG. At most one axes layer (without one the axes fit the data);
// layers sharing a name share a style and a single legend entry.
std::string render_plot_svg(const std::vector<PlotLayer>& layers);

}  // namespace cbvf
