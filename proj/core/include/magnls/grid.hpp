#pragma once

#include <cstddef>
#include <stdexcept>

#include "magnls/geometry.hpp"

namespace magnls {

/// Uniform rectangular grid of interior nodes with homogeneous Dirichlet
/// boundary. The boundary nodes are implicit and carry the value zero:
/// node (i,j) sits at origin + ((i+1)*hx, (j+1)*hy), so i = -1 and i = nx
/// land on the boundary of the box [origin, origin + extent].
struct Grid2D {
  Vec2 origin{};
  Vec2 extent{};
  int nx = 0;
  int ny = 0;
  double hx = 0.0;
  double hy = 0.0;

  Grid2D() = default;

  Grid2D(Vec2 origin_, Vec2 extent_, int nx_, int ny_)
      : origin(origin_), extent(extent_), nx(nx_), ny(ny_) {
    if (nx < 4 || ny < 4) throw std::invalid_argument("Grid2D: need at least 4 interior nodes per axis");
    if (!(extent.x > 0.0) || !(extent.y > 0.0))
      throw std::invalid_argument("Grid2D: extent must be positive");
    hx = extent.x / (nx + 1);
    hy = extent.y / (ny + 1);
  }

  static Grid2D over(const Rect& box, int nx, int ny) {
    box.validate();
    return Grid2D({box.xmin, box.ymin}, {box.width(), box.height()}, nx, ny);
  }

  std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }

  double x(int i) const { return origin.x + (i + 1) * hx; }
  double y(int j) const { return origin.y + (j + 1) * hy; }
  Vec2 node(int i, int j) const { return {x(i), y(j)}; }
  Vec2 center() const { return origin + extent * 0.5; }
  double cell_area() const { return hx * hy; }
  Rect box() const { return {origin.x, origin.x + extent.x, origin.y, origin.y + extent.y}; }

  bool same_as(const Grid2D& o) const {
    return nx == o.nx && ny == o.ny && origin.x == o.origin.x && origin.y == o.origin.y &&
           extent.x == o.extent.x && extent.y == o.extent.y;
  }
};

inline void require_same_grid(const Grid2D& a, const Grid2D& b, const char* what) {
  if (!a.same_as(b)) throw std::invalid_argument(std::string(what) + ": fields live on different grids");
}

}  // namespace magnls
