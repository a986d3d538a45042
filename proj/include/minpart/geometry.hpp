#pragma once

#include <string>
#include <variant>
#include <vector>

#include "minpart/errors.hpp"

namespace minpart {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point a);
double distance(Point a, Point b);

// Axis-aligned rectangle given by its lower-left corner and extents.
struct Rect {
  Point min;
  double width = 0.0;
  double height = 0.0;
  Point max() const { return {min.x + width, min.y + height}; }
};

struct Disk {
  Point center;
  double radius = 0.0;
};

// Simple (non-self-intersecting) closed loop; orientation free.
struct Polygon {
  std::vector<Point> vertices;
};

using Shape = std::variant<Rect, Disk, Polygon>;

bool shape_contains(const Shape& s, Point p);       // strict interior
double shape_boundary_distance(const Shape& s, Point p);
Rect shape_bounding_box(const Shape& s);
double shape_area(const Shape& s);
bool polygon_is_simple(const Polygon& poly);

// Distance from p to the segment [a, b].
double segment_distance(Point a, Point b, Point p);

struct Hole {
  Shape shape;
  int index = -1;
};

// Bounded open set: outer shape minus closed holes. Immutable once built.
class Domain {
 public:
  explicit Domain(Shape outer, std::vector<Shape> holes = {});

  static Domain square(double side);
  static Domain rectangle(double width, double height);
  static Domain disk(double radius);

  const Shape& outer() const { return outer_; }
  const std::vector<Hole>& holes() const { return holes_; }
  Rect bounding_box() const { return bbox_; }

  // Distance to the union of all boundary curves (outer and holes).
  double boundary_distance(Point p) const;
  Point centroid() const;            // bounding-box center
  double inradius_estimate() const;  // distance from centroid to boundary

 private:
  Shape outer_;
  std::vector<Hole> holes_;
  Rect bbox_;
};

enum class Region { Interior, InHole, Exterior, BoundaryAdjacent };

struct Membership {
  Region region = Region::Exterior;
  int hole_index = -1;
};

// Total membership classification. Points on any boundary curve classify as
// exterior (conservative Dirichlet masking); an interior point within
// boundary_tol of the boundary reports BoundaryAdjacent.
Membership contains(const Domain& domain, Point p, double boundary_tol = 0.0);

struct PolePlacement {
  Point position;
  int hole_index = -1;  // -1: pole lies in the open domain
};

// Validated pole configuration; ordering preserved from the input list.
struct PoleSet {
  std::vector<PolePlacement> poles;

  bool empty() const { return poles.empty(); }
  std::size_t size() const { return poles.size(); }
  std::vector<Point> positions() const;
};

// Checks pairwise distinctness (1e-12), containment, and the one-pole-per-hole
// rule. Throws DuplicatePole, PoleOutsideDomain, TwoPolesInOneHole.
PoleSet validate_pole_set(const Domain& domain, const std::vector<Point>& candidates);

}  // namespace minpart
