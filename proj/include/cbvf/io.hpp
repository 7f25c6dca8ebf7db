#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cbvf/level_set.hpp"
#include "cbvf/simulation.hpp"
#include "cbvf/solver.hpp"

namespace cbvf {

// Container: "CBVF1\n", text header lines, a blank line, then every slice as
// little-endian float64, slices in time order, row-major last dimension fastest.
void write_value_function(std::ostream& out, const ValueFunction& vf);
ValueFunction read_value_function(std::istream& in);
void export_value_function(const ValueFunction& vf, const std::string& path);
ValueFunction import_value_function(const std::string& path);

// Header only, as written (for `cbvf info`).
std::string read_value_function_header(const std::string& path);

// Columns t, x_*, u_*, d_*, B, l, mode with 17 significant digits.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
void export_trajectory_csv(const Trajectory& traj, const std::string& path);
Trajectory read_trajectory_csv(std::istream& in);
Trajectory import_trajectory_csv(const std::string& path);

// Columns polyline, x, y.
void write_level_set_csv(std::ostream& out, const std::vector<LevelSetPolyline>& lines);

// Writes text to path, creating parent directories.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cbvf
