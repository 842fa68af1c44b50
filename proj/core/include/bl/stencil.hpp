#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bl/grid.hpp"

namespace bl {

// Finite-difference weights for the m-th derivative at x0 from the given
// nodes (Fornberg's recursion). Exact on polynomials up to degree
// nodes.size() - 1.
std::vector<double> fd_weights(double x0, std::span<const double> nodes, int m);

// m-th derivative of sampled values on a (possibly graded) grid.
// `npoints` is the stencil width; the default order + 3 gives formal interior
// accuracy >= 2 everywhere, including the one-sided boundary stencils.
// Requires n >= order + 4 and 1 <= order <= 4.
std::vector<double> derivative(std::span<const double> values, const Grid1D& grid,
                               int order, int npoints = 0);

// Precomputed derivative operator for repeated application on one grid.
class DerivOp {
 public:
  DerivOp() = default;
  DerivOp(const Grid1D& grid, int order, int npoints = 0);

  void apply(std::span<const double> values, std::span<double> out) const;
  std::vector<double> apply(std::span<const double> values) const;

  int order() const { return order_; }

 private:
  int order_ = 0;
  std::size_t n_ = 0;
  int width_ = 0;
  std::vector<int> start_;        // stencil start index per node
  std::vector<double> weights_;   // width_ weights per node
};

// Centered 2nd-order first derivative (one-sided 2nd-order at the ends).
// This is the stencil the divergence-free layer constructions are built
// against; see leapfrog_* in quadrature.hpp.
std::vector<double> d1_compat(std::span<const double> values, double h);

}  // namespace bl
