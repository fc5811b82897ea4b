#pragma once

#include <cmath>
#include <stdexcept>

namespace magnls {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  double norm_sq() const { return x * x + y * y; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

/// Axis-aligned rectangle, used for domains and concentration regions.
struct Rect {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;

  static Rect centered(Vec2 c, double half_width, double half_height) {
    return {c.x - half_width, c.x + half_width, c.y - half_height, c.y + half_height};
  }
  static Rect square(double half_width) { return centered({0, 0}, half_width, half_width); }

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  Vec2 center() const { return {0.5 * (xmin + xmax), 0.5 * (ymin + ymax)}; }
  double diameter() const { return std::hypot(width(), height()); }

  bool contains(Vec2 p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }
  bool contains(const Rect& r) const {
    return r.xmin >= xmin && r.xmax <= xmax && r.ymin >= ymin && r.ymax <= ymax;
  }
  bool strictly_contains(Vec2 p) const {
    return p.x > xmin && p.x < xmax && p.y > ymin && p.y < ymax;
  }

  void validate() const {
    if (!(xmax > xmin) || !(ymax > ymin))
      throw std::invalid_argument("Rect: empty or inverted rectangle");
  }
};

}  // namespace magnls
