#include "bl/grid.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace bl {

Grid1D::Grid1D(std::vector<double> nodes_, SpacingKind kind_)
    : nodes(std::move(nodes_)), kind(kind_) {
  validate();
}

void Grid1D::validate() const {
  if (nodes.size() < 16) throw std::invalid_argument("Grid1D: need n >= 16 nodes");
  if (nodes.front() != 0.0) throw std::invalid_argument("Grid1D: nodes[0] must be 0");
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!(nodes[i] > nodes[i - 1]))
      throw std::invalid_argument("Grid1D: nodes must be strictly increasing");
  }
  if (kind == SpacingKind::graded) {
    for (std::size_t i = 2; i < nodes.size(); ++i) {
      const double r = (nodes[i] - nodes[i - 1]) / (nodes[i - 1] - nodes[i - 2]);
      if (r > 1.2 + 1e-12 || r < 1.0 / 1.2 - 1e-12)
        throw std::invalid_argument("Grid1D: graded spacing ratio exceeds 1.2");
    }
  }
}

bool Grid1D::is_uniform() const {
  const double h0 = nodes[1] - nodes[0];
  for (std::size_t i = 2; i < nodes.size(); ++i) {
    if (std::abs((nodes[i] - nodes[i - 1]) - h0) > 1e-12 * std::max(1.0, h0)) return false;
  }
  return true;
}

double Grid1D::h() const {
  if (!is_uniform()) throw std::logic_error("Grid1D::h: grid is not uniform");
  return nodes[1] - nodes[0];
}

std::size_t Grid1D::nearest(double y) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), y);
  if (it == nodes.end()) return nodes.size() - 1;
  if (it == nodes.begin()) return 0;
  std::size_t i = static_cast<std::size_t>(it - nodes.begin());
  return (y - nodes[i - 1] <= nodes[i] - y) ? i - 1 : i;
}

Grid1D make_uniform_grid(std::size_t n, double y_max) {
  if (n < 16) throw std::invalid_argument("make_uniform_grid: n >= 16 required");
  if (!(y_max > 0)) throw std::invalid_argument("make_uniform_grid: y_max > 0 required");
  std::vector<double> nodes(n);
  const double h = y_max / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) nodes[i] = h * static_cast<double>(i);
  nodes.back() = y_max;
  return Grid1D(std::move(nodes), SpacingKind::uniform);
}

Grid1D make_graded_grid(std::size_t n, double y_max, double ratio) {
  if (n < 16) throw std::invalid_argument("make_graded_grid: n >= 16 required");
  if (ratio <= 1.0 || ratio > 1.2)
    throw std::invalid_argument("make_graded_grid: ratio must be in (1, 1.2]");
  // h_i = h0 * ratio^i, sum = y_max
  const double q = ratio;
  const double sum = (std::pow(q, static_cast<double>(n - 1)) - 1.0) / (q - 1.0);
  const double h0 = y_max / sum;
  std::vector<double> nodes(n);
  nodes[0] = 0.0;
  double h = h0;
  for (std::size_t i = 1; i < n; ++i) {
    nodes[i] = nodes[i - 1] + h;
    h *= q;
  }
  nodes.back() = y_max;
  return Grid1D(std::move(nodes), SpacingKind::graded);
}

double Grid2D::dx() const {
  const double d0 = x_nodes[1] - x_nodes[0];
  for (std::size_t i = 2; i < x_nodes.size(); ++i) {
    if (std::abs((x_nodes[i] - x_nodes[i - 1]) - d0) > 1e-12 * std::max(1.0, d0))
      throw std::logic_error("Grid2D::dx: x nodes are not uniform");
  }
  return d0;
}

void Grid2D::validate() const {
  if (x_nodes.size() < 3) throw std::invalid_argument("Grid2D: need >= 3 x nodes");
  if (x_nodes.front() != 0.0) throw std::invalid_argument("Grid2D: x_nodes[0] must be 0");
  if (!(x_nodes.back() > 0)) throw std::invalid_argument("Grid2D: L > 0 required");
  for (std::size_t i = 1; i < x_nodes.size(); ++i)
    if (!(x_nodes[i] > x_nodes[i - 1]))
      throw std::invalid_argument("Grid2D: x_nodes must be strictly increasing");
  y_grid.validate();
}

Grid2D make_uniform_grid2d(std::size_t nx, double L, std::size_t ny, double y_max) {
  Grid2D g;
  g.x_nodes.resize(nx);
  for (std::size_t i = 0; i < nx; ++i)
    g.x_nodes[i] = L * static_cast<double>(i) / static_cast<double>(nx - 1);
  g.x_nodes.back() = L;
  g.y_grid = make_uniform_grid(ny, y_max);
  g.validate();
  return g;
}

WeightSpec WeightSpec::poly(double m) {
  WeightSpec w;
  w.kind = Kind::poly_bracket;
  w.m = m;
  return w;
}

WeightSpec WeightSpec::inv_v1e(std::vector<double> v1e_trace) {
  WeightSpec w;
  w.kind = Kind::inv_v1e;
  w.samples = std::move(v1e_trace);
  return w;
}

WeightSpec WeightSpec::custom(std::vector<double> weight) {
  WeightSpec w;
  w.kind = Kind::custom;
  w.samples = std::move(weight);
  return w;
}

std::vector<double> WeightSpec::evaluate(const Grid1D& g) const {
  std::vector<double> w(g.n());
  switch (kind) {
    case Kind::poly_bracket:
      for (std::size_t i = 0; i < g.n(); ++i) w[i] = std::pow(bracket(g.nodes[i]), m);
      break;
    case Kind::inv_v1e: {
      if (samples.size() != g.n())
        throw std::invalid_argument("WeightSpec::inv_v1e: trace length mismatch");
      for (std::size_t i = 0; i < g.n(); ++i) {
        if (!(samples[i] > 0.0))
          throw std::invalid_argument("WeightSpec::inv_v1e: trace must be positive");
        w[i] = bracket(g.nodes[i]) / samples[i];
      }
      break;
    }
    case Kind::custom:
      if (samples.size() != g.n())
        throw std::invalid_argument("WeightSpec::custom: weight length mismatch");
      w = samples;
      break;
  }
  for (double v : w)
    if (!(v > 0.0)) throw std::invalid_argument("WeightSpec: weight must be positive");
  return w;
}

std::string grid_to_json(const Grid1D& g) {
  nlohmann::json j;
  j["nodes"] = g.nodes;
  j["y_max"] = g.y_max();
  j["kind"] = (g.kind == SpacingKind::uniform) ? "uniform" : "graded";
  return j.dump();
}

Grid1D grid_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<double> nodes = j.at("nodes").get<std::vector<double>>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "uniform" && kind != "graded")
    throw std::invalid_argument("grid_from_json: kind must be uniform or graded");
  const double y_max = j.at("y_max").get<double>();
  if (!nodes.empty() && std::abs(nodes.back() - y_max) > 1e-12)
    throw std::invalid_argument("grid_from_json: y_max does not match last node");
  return Grid1D(std::move(nodes),
                kind == "uniform" ? SpacingKind::uniform : SpacingKind::graded);
}

}  // namespace bl
