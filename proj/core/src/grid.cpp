#include "singquad/grid.hpp"

#include <cmath>
#include <string>

namespace singquad {

UniformGrid make_grid(double a, double c, std::size_t m) {
  if (!std::isfinite(a) || !std::isfinite(c)) {
    throw InvalidArgumentError("make_grid: endpoints must be finite");
  }
  if (m < 1) {
    throw InvalidArgumentError("make_grid: need at least one interval");
  }
  if (!(c > a)) {
    throw InvalidArgumentError("make_grid: require c > a");
  }
  return UniformGrid{a, (c - a) / static_cast<double>(m), m};
}

SingularityLocation locate_singularity(const UniformGrid& grid, double xstar,
                                       double node_tol) {
  if (!std::isfinite(xstar)) {
    throw InvalidArgumentError("locate_singularity: x* must be finite");
  }
  if (!(xstar > grid.a) || !(xstar < grid.right())) {
    throw OutOfRangeError("locate_singularity: x* = " + std::to_string(xstar) +
                          " outside (" + std::to_string(grid.a) + ", " +
                          std::to_string(grid.right()) + ")");
  }
  auto j = static_cast<std::size_t>(std::floor((xstar - grid.a) / grid.h));
  if (j >= grid.m) j = grid.m - 1;
  // Guard against floor landing one interval off near a node.
  if (xstar < grid.node(j) && j > 0) --j;
  if (xstar >= grid.node(j + 1) && j + 1 < grid.m) ++j;

  const double alpha_left = xstar - grid.node(j);
  const double alpha_right = grid.node(j + 1) - xstar;
  const double amin = std::min(alpha_left, alpha_right);
  // An exact node hit is ambiguous regardless of the tolerance.
  if (amin <= 0.0 || amin < node_tol * grid.h) {
    throw NodeCollisionError(
        "locate_singularity: x* = " + std::to_string(xstar) +
        " collides with a grid node (tol " + std::to_string(node_tol) + "*h)");
  }
  return SingularityLocation{j, alpha_left, alpha_right};
}

}  // namespace singquad
