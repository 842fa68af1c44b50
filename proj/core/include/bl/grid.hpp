#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bl {

enum class SpacingKind { uniform, graded };

// 1D grid on [0, y_max]. Nodes are strictly increasing with nodes[0] = 0.
// Graded grids cluster near y = 0 with geometric stretching (default ratio
// 1.05, bounded by 1.2).
struct Grid1D {
  std::vector<double> nodes;
  SpacingKind kind = SpacingKind::uniform;

  Grid1D() = default;
  Grid1D(std::vector<double> nodes_, SpacingKind kind_);

  std::size_t n() const { return nodes.size(); }
  double y_max() const { return nodes.back(); }
  double operator[](std::size_t i) const { return nodes[i]; }
  bool is_uniform() const;
  // Uniform spacing; throws for graded grids.
  double h() const;
  // Index of the node closest to y.
  std::size_t nearest(double y) const;

  void validate() const;
};

Grid1D make_uniform_grid(std::size_t n, double y_max);
Grid1D make_graded_grid(std::size_t n, double y_max, double ratio = 1.05);

// Tensor grid on (0, L) x (0, y_max).
struct Grid2D {
  std::vector<double> x_nodes;
  Grid1D y_grid;

  std::size_t nx() const { return x_nodes.size(); }
  std::size_t ny() const { return y_grid.n(); }
  double L() const { return x_nodes.back(); }
  double dx() const;
  void validate() const;
};

Grid2D make_uniform_grid2d(std::size_t nx, double L, std::size_t ny, double y_max);

// Scalar field sampled on a Grid2D, stored as a(ix * ny + iy).
struct Field2D {
  std::size_t nx = 0, ny = 0;
  std::vector<double> a;

  Field2D() = default;
  Field2D(std::size_t nx_, std::size_t ny_) : nx(nx_), ny(ny_), a(nx_ * ny_, 0.0) {}
  double& operator()(std::size_t ix, std::size_t iy) { return a[ix * ny + iy]; }
  double operator()(std::size_t ix, std::size_t iy) const { return a[ix * ny + iy]; }
  // Column at x-station ix (contiguous).
  const double* col(std::size_t ix) const { return a.data() + ix * ny; }
  double* col(std::size_t ix) { return a.data() + ix * ny; }
};

// Japanese bracket <y> = sqrt(1 + y^2).
inline double bracket(double y) { return std::sqrt(1.0 + y * y); }

// Positive pointwise weight used by the weighted norms.
//   poly_bracket:  <y>^m
//   inv_v1e:       <y> / v1e_trace(y)   (trace must be strictly positive)
//   custom:        arbitrary positive samples
struct WeightSpec {
  enum class Kind { poly_bracket, inv_v1e, custom };
  Kind kind = Kind::poly_bracket;
  double m = 0.0;
  std::vector<double> samples;  // inv_v1e: the v1e trace; custom: the weight itself

  static WeightSpec poly(double m);
  static WeightSpec inv_v1e(std::vector<double> v1e_trace);
  static WeightSpec custom(std::vector<double> weight);

  // Weight values on the grid; validates positivity.
  std::vector<double> evaluate(const Grid1D& g) const;
};

std::string grid_to_json(const Grid1D& g);
Grid1D grid_from_json(const std::string& text);

}  // namespace bl
