#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fockradial {

/// Evenly spaced axis "min:max:count"; count = 1 yields just min.
struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 1;

  static GridSpec parse(const std::string& text);
  std::vector<double> values() const;
};

/// Cartesian product of the axes, row-major (last axis fastest).
std::vector<std::vector<double>> grid_points(const std::vector<GridSpec>& axes);

} // namespace fockradial
