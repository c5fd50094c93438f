#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "biprabhakar/bicomplex.hpp"

namespace biprab {

/// Uniform grid t_i = i·h, i = 0..n_points−1.
struct TimeGrid {
  double h = 0.0;
  int n_points = 0;

  static TimeGrid make(double h, int n_points);
  /// Grid on [0, t_end] with step close to h (h is adjusted so t_end is a node).
  static TimeGrid covering(double t_end, double h);

  double t(int i) const { return i * h; }
  double t_end() const { return (n_points - 1) * h; }
  bool operator==(const TimeGrid&) const = default;
};

/// Bicomplex samples on a TimeGrid.
struct GridFunction {
  TimeGrid grid;
  std::vector<Bicomplex> values;

  GridFunction() = default;
  explicit GridFunction(TimeGrid g) : grid(g), values(static_cast<size_t>(g.n_points)) {}

  /// Indices of nodes with a non-finite component.
  std::vector<int> nonfinite_nodes() const;
};

/// Header `t,x0,x1,x2,x3`, 17 significant digits.
void write_csv(std::ostream& os, const GridFunction& f);
std::string to_csv(const GridFunction& f);

/// Reads the format above. Throws GridError unless the t column starts at 0
/// and is uniform to within 1e−9 relative.
GridFunction read_csv(std::istream& is);
GridFunction read_csv_file(const std::string& path);

}  // namespace biprab
