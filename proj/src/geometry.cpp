#include "minpart/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace minpart {

namespace {

constexpr double kOnBoundaryTol = 1e-14;

bool rect_contains(const Rect& r, Point p) {
  return p.x > r.min.x && p.x < r.min.x + r.width && p.y > r.min.y &&
         p.y < r.min.y + r.height;
}

double rect_boundary_distance(const Rect& r, Point p) {
  const Point mx = r.max();
  if (rect_contains(r, p)) {
    return std::min(std::min(p.x - r.min.x, mx.x - p.x),
                    std::min(p.y - r.min.y, mx.y - p.y));
  }
  const double dx = std::max({r.min.x - p.x, 0.0, p.x - mx.x});
  const double dy = std::max({r.min.y - p.y, 0.0, p.y - mx.y});
  return std::hypot(dx, dy);
}

bool polygon_contains(const Polygon& poly, Point p) {
  // Crossing-number test; points on an edge are resolved by the caller via
  // the boundary distance.
  bool inside = false;
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if ((v[i].y > p.y) != (v[j].y > p.y)) {
      const double t = (p.y - v[i].y) / (v[j].y - v[i].y);
      if (p.x < v[i].x + t * (v[j].x - v[i].x)) inside = !inside;
    }
  }
  return inside;
}

double polygon_boundary_distance(const Polygon& poly, Point p) {
  double d = std::numeric_limits<double>::infinity();
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    d = std::min(d, segment_distance(v[j], v[i], p));
  }
  return d;
}

// Proper or touching intersection of segments (a,b) and (c,d).
bool segments_intersect(Point a, Point b, Point c, Point d) {
  auto orient = [](Point p, Point q, Point r) {
    const double v = cross(q - p, r - p);
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
  };
  auto on_segment = [](Point p, Point q, Point r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
  };
  const int o1 = orient(a, b, c), o2 = orient(a, b, d);
  const int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

double scale_of(const Rect& bbox) {
  return std::max({std::abs(bbox.min.x), std::abs(bbox.min.y),
                   bbox.width + std::abs(bbox.min.x),
                   bbox.height + std::abs(bbox.min.y), 1.0});
}

}  // namespace

double norm(Point a) { return std::hypot(a.x, a.y); }
double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double segment_distance(Point a, Point b, Point p) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(a, p);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance({a.x + t * ab.x, a.y + t * ab.y}, p);
}

bool shape_contains(const Shape& s, Point p) {
  return std::visit(
      [&](const auto& sh) -> bool {
        using T = std::decay_t<decltype(sh)>;
        if constexpr (std::is_same_v<T, Rect>) {
          return rect_contains(sh, p);
        } else if constexpr (std::is_same_v<T, Disk>) {
          return distance(sh.center, p) < sh.radius;
        } else {
          return polygon_contains(sh, p);
        }
      },
      s);
}

double shape_boundary_distance(const Shape& s, Point p) {
  return std::visit(
      [&](const auto& sh) -> double {
        using T = std::decay_t<decltype(sh)>;
        if constexpr (std::is_same_v<T, Rect>) {
          return rect_boundary_distance(sh, p);
        } else if constexpr (std::is_same_v<T, Disk>) {
          return std::abs(distance(sh.center, p) - sh.radius);
        } else {
          return polygon_boundary_distance(sh, p);
        }
      },
      s);
}

Rect shape_bounding_box(const Shape& s) {
  return std::visit(
      [&](const auto& sh) -> Rect {
        using T = std::decay_t<decltype(sh)>;
        if constexpr (std::is_same_v<T, Rect>) {
          return sh;
        } else if constexpr (std::is_same_v<T, Disk>) {
          return Rect{{sh.center.x - sh.radius, sh.center.y - sh.radius},
                      2.0 * sh.radius, 2.0 * sh.radius};
        } else {
          double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
          double x1 = -x0, y1 = -x0;
          for (const Point& v : sh.vertices) {
            x0 = std::min(x0, v.x);
            y0 = std::min(y0, v.y);
            x1 = std::max(x1, v.x);
            y1 = std::max(y1, v.y);
          }
          return Rect{{x0, y0}, x1 - x0, y1 - y0};
        }
      },
      s);
}

double shape_area(const Shape& s) {
  return std::visit(
      [&](const auto& sh) -> double {
        using T = std::decay_t<decltype(sh)>;
        if constexpr (std::is_same_v<T, Rect>) {
          return sh.width * sh.height;
        } else if constexpr (std::is_same_v<T, Disk>) {
          return M_PI * sh.radius * sh.radius;
        } else {
          double a = 0.0;
          const auto& v = sh.vertices;
          for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
            a += cross(v[j], v[i]);
          }
          return std::abs(a) / 2.0;
        }
      },
      s);
}

bool polygon_is_simple(const Polygon& poly) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = v[i], b = v[(i + 1) % n];
    if (distance(a, b) == 0.0) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      // Skip adjacent edges (they share an endpoint by construction).
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_intersect(a, b, v[j], v[(j + 1) % n])) return false;
    }
  }
  return true;
}

Domain::Domain(Shape outer, std::vector<Shape> holes) : outer_(std::move(outer)) {
  if (const auto* rect = std::get_if<Rect>(&outer_)) {
    if (rect->width <= 0 || rect->height <= 0)
      throw ValidationError("outer rectangle must have positive extents");
  } else if (const auto* disk = std::get_if<Disk>(&outer_)) {
    if (disk->radius <= 0) throw ValidationError("outer disk must have positive radius");
  } else if (const auto* poly = std::get_if<Polygon>(&outer_)) {
    if (!polygon_is_simple(*poly))
      throw ValidationError("outer polygon must be a simple loop");
    if (shape_area(outer_) <= 0) throw ValidationError("outer polygon has zero area");
  }
  bbox_ = shape_bounding_box(outer_);

  int idx = 0;
  for (Shape& hs : holes) {
    if (const auto* poly = std::get_if<Polygon>(&hs)) {
      if (!polygon_is_simple(*poly))
        throw ValidationError("hole " + std::to_string(idx) + " polygon not simple");
    }
    if (shape_area(hs) <= 0)
      throw ValidationError("hole " + std::to_string(idx) + " has zero area");
    // Closure of the hole must sit strictly inside the outer shape: its
    // bounding box corners plus center must be interior with positive margin.
    const Rect hb = shape_bounding_box(hs);
    const Point probes[] = {hb.min,
                            {hb.min.x + hb.width, hb.min.y},
                            {hb.min.x, hb.min.y + hb.height},
                            hb.max(),
                            {hb.min.x + hb.width / 2, hb.min.y + hb.height / 2}};
    for (const Point& q : probes) {
      if (!shape_contains(outer_, q))
        throw ValidationError("hole " + std::to_string(idx) +
                              " is not strictly inside the outer shape");
    }
    holes_.push_back(Hole{std::move(hs), idx});
    ++idx;
  }
  for (std::size_t i = 0; i < holes_.size(); ++i) {
    for (std::size_t j = i + 1; j < holes_.size(); ++j) {
      const Rect a = shape_bounding_box(holes_[i].shape);
      const Rect b = shape_bounding_box(holes_[j].shape);
      const bool disjoint_boxes = a.min.x + a.width < b.min.x ||
                                  b.min.x + b.width < a.min.x ||
                                  a.min.y + a.height < b.min.y ||
                                  b.min.y + b.height < a.min.y;
      if (!disjoint_boxes) {
        // Boxes overlap; fall back to a center-inside test to reject overlap.
        const Point ca{a.min.x + a.width / 2, a.min.y + a.height / 2};
        const Point cb{b.min.x + b.width / 2, b.min.y + b.height / 2};
        if (shape_contains(holes_[j].shape, ca) || shape_contains(holes_[i].shape, cb))
          throw ValidationError("holes " + std::to_string(i) + " and " +
                                std::to_string(j) + " overlap");
      }
    }
  }
}

Domain Domain::square(double side) {
  return Domain(Rect{{0.0, 0.0}, side, side});
}

Domain Domain::rectangle(double width, double height) {
  return Domain(Rect{{0.0, 0.0}, width, height});
}

Domain Domain::disk(double radius) {
  return Domain(Disk{{0.0, 0.0}, radius});
}

double Domain::boundary_distance(Point p) const {
  double d = shape_boundary_distance(outer_, p);
  for (const Hole& h : holes_) d = std::min(d, shape_boundary_distance(h.shape, p));
  return d;
}

Point Domain::centroid() const {
  return {bbox_.min.x + bbox_.width / 2.0, bbox_.min.y + bbox_.height / 2.0};
}

double Domain::inradius_estimate() const {
  return boundary_distance(centroid());
}

Membership contains(const Domain& domain, Point p, double boundary_tol) {
  const double eps = kOnBoundaryTol * scale_of(domain.bounding_box());
  if (!shape_contains(domain.outer(), p) ||
      shape_boundary_distance(domain.outer(), p) <= eps) {
    return {Region::Exterior, -1};
  }
  for (const Hole& h : domain.holes()) {
    if (shape_contains(h.shape, p) || shape_boundary_distance(h.shape, p) <= eps) {
      return {Region::InHole, h.index};
    }
  }
  if (boundary_tol > 0.0 && domain.boundary_distance(p) <= boundary_tol) {
    return {Region::BoundaryAdjacent, -1};
  }
  return {Region::Interior, -1};
}

std::vector<Point> PoleSet::positions() const {
  std::vector<Point> out;
  out.reserve(poles.size());
  for (const auto& p : poles) out.push_back(p.position);
  return out;
}

PoleSet validate_pole_set(const Domain& domain, const std::vector<Point>& candidates) {
  constexpr double kDistinctTol = 1e-12;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (distance(candidates[i], candidates[j]) < kDistinctTol) {
        throw DuplicatePole("poles " + std::to_string(i) + " and " +
                            std::to_string(j) + " coincide");
      }
    }
  }
  PoleSet set;
  std::vector<int> hole_use(domain.holes().size(), -1);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Membership m = contains(domain, candidates[i]);
    switch (m.region) {
      case Region::Interior:
      case Region::BoundaryAdjacent:
        set.poles.push_back({candidates[i], -1});
        break;
      case Region::InHole:
        if (hole_use[m.hole_index] >= 0) {
          throw TwoPolesInOneHole("poles " + std::to_string(hole_use[m.hole_index]) +
                                  " and " + std::to_string(i) + " share hole " +
                                  std::to_string(m.hole_index));
        }
        hole_use[m.hole_index] = static_cast<int>(i);
        set.poles.push_back({candidates[i], m.hole_index});
        break;
      case Region::Exterior:
        throw PoleOutsideDomain("pole " + std::to_string(i) + " at (" +
                                std::to_string(candidates[i].x) + ", " +
                                std::to_string(candidates[i].y) +
                                ") lies outside the domain");
    }
  }
  return set;
}

}  // namespace minpart
