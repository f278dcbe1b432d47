#pragma once

#include <cstddef>
#include <vector>

#include "singquad/errors.hpp"

namespace singquad {

/// Uniform partition of [a, a + m*h] into m intervals. Nodes are always
/// derived as a + i*h, never accumulated, so refinement studies are
/// bit-reproducible.
struct UniformGrid {
  double a = 0.0;
  double h = 1.0;
  std::size_t m = 1;

  double node(std::size_t i) const { return a + static_cast<double>(i) * h; }
  double right() const { return node(m); }
};

/// Point values on a grid, values[i] = f(node(i)).
struct SampleSet {
  UniformGrid grid;
  std::vector<double> values;
};

/// Singularity abscissa plus the jump vector:
/// jumps[k] = [f^(k)] = f^(k)+(x*) - f^(k)-(x*).
struct SingularitySpec {
  double xstar = 0.0;
  std::vector<double> jumps;
};

/// Position of a singularity relative to the grid: x* lies strictly inside
/// interval (node(j), node(j+1)) with j = interval_index.
struct SingularityLocation {
  std::size_t interval_index = 0;
  double alpha_left = 0.0;   // x* - node(j)
  double alpha_right = 0.0;  // node(j+1) - x*
};

/// Fraction of h below which side attribution of a nodal sample is
/// numerically meaningless.
inline constexpr double kDefaultNodeTol = 1e-12;

UniformGrid make_grid(double a, double c, std::size_t m);

SingularityLocation locate_singularity(const UniformGrid& grid, double xstar,
                                       double node_tol = kDefaultNodeTol);

}  // namespace singquad
