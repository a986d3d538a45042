#include "minpart/magnetics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace minpart {

namespace {

// Principal angle subtended at x by the directed segment a -> b, in (-pi, pi).
// For a straight segment not through x this equals the continuous change of
// the polar angle along the segment.
double subtended_angle(Point x, Point a, Point b) {
  const Point u = a - x;
  const Point v = b - x;
  return std::atan2(cross(u, v), dot(u, v));
}

struct CellCandidate {
  double dist2 = std::numeric_limits<double>::infinity();
  Point center;
  bool found = false;
};

void consider(CellCandidate& best, Point target, Point center) {
  const double d2 = (center.x - target.x) * (center.x - target.x) +
                    (center.y - target.y) * (center.y - target.y);
  const double tol = 1e-12 * (1.0 + best.dist2);
  if (!best.found || d2 < best.dist2 - tol) {
    best = {d2, center, true};
  } else if (d2 < best.dist2 + tol) {
    if (center.x < best.center.x - 1e-15 ||
        (std::abs(center.x - best.center.x) <= 1e-15 && center.y < best.center.y)) {
      best = {d2, center, true};
    }
  }
}

// Expanding-ring search over lattice cells around the pole position.
Point nearest_cell_center(const Grid& grid, Point p, bool want_plaquette, int hole_index) {
  const Rect bbox = grid.domain().bounding_box();
  const double h = grid.spacing();
  const int cx0 = static_cast<int>(std::floor((p.x - bbox.min.x) / h - 0.5));
  const int cy0 = static_cast<int>(std::floor((p.y - bbox.min.y) / h - 0.5));
  CellCandidate best;
  const int rmax = std::max(grid.max_ix(), grid.max_iy()) + 2;
  for (int r = 0; r <= rmax; ++r) {
    if (best.found && best.dist2 < (r - 1) * (r - 1) * h * h) break;
    for (int dy = -r; dy <= r; ++dy) {
      for (int dx = -r; dx <= r; ++dx) {
        if (std::max(std::abs(dx), std::abs(dy)) != r) continue;
        const int cx = cx0 + dx, cy = cy0 + dy;
        if (!grid.cell_in_lattice_range(cx, cy)) continue;
        const bool is_plaquette = grid.plaquette_at(cx, cy) >= 0;
        if (want_plaquette) {
          if (!is_plaquette) continue;
        } else {
          if (is_plaquette) continue;
          const Membership m = contains(grid.domain(), grid.cell_center(cx, cy));
          if (m.region != Region::InHole || m.hole_index != hole_index) continue;
        }
        consider(best, p, grid.cell_center(cx, cy));
      }
    }
  }
  if (!best.found) {
    throw ValidationError(want_plaquette
                              ? "no plaquette available to snap a pole onto"
                              : "no excluded cell inside hole " + std::to_string(hole_index));
  }
  return best.center;
}

}  // namespace

double link_phase(const PoleSet& poles, Point a, Point b) {
  const double len = distance(a, b);
  double phase = 0.0;
  for (const PolePlacement& pole : poles.poles) {
    if (segment_distance(a, b, pole.position) < 1e-12 * len) {
      throw PoleOnEdge("pole at (" + std::to_string(pole.position.x) + ", " +
                       std::to_string(pole.position.y) + ") lies on a grid edge");
    }
    phase += 0.5 * subtended_angle(pole.position, a, b);
  }
  return phase;
}

PoleSet snap_poles(const Grid& grid, const PoleSet& poles, std::vector<double>* displacement) {
  PoleSet snapped;
  snapped.poles.reserve(poles.size());
  if (displacement) displacement->clear();
  for (const PolePlacement& pole : poles.poles) {
    const Point target =
        nearest_cell_center(grid, pole.position, pole.hole_index < 0, pole.hole_index);
    snapped.poles.push_back({target, pole.hole_index});
    if (displacement) displacement->push_back(distance(target, pole.position));
  }
  // Snapping may merge nearby candidates onto one plaquette; that violates
  // distinctness just as a duplicate input would.
  for (std::size_t i = 0; i < snapped.poles.size(); ++i) {
    for (std::size_t j = i + 1; j < snapped.poles.size(); ++j) {
      if (distance(snapped.poles[i].position, snapped.poles[j].position) <
          0.5 * grid.spacing()) {
        throw DuplicatePole("poles " + std::to_string(i) + " and " + std::to_string(j) +
                            " snap onto the same lattice cell");
      }
    }
  }
  return snapped;
}

SparseHermitian assemble_laplacian(const Grid& grid) {
  const double h2inv = 1.0 / (grid.spacing() * grid.spacing());
  const int n = grid.node_count();
  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(static_cast<std::size_t>(n) + 2 * grid.edges().size());
  for (int i = 0; i < n; ++i) trip.emplace_back(i, i, cplx(4.0 * h2inv, 0.0));
  for (const GridEdge& e : grid.edges()) {
    trip.emplace_back(e.a, e.b, cplx(-h2inv, 0.0));
    trip.emplace_back(e.b, e.a, cplx(-h2inv, 0.0));
  }
  SparseHermitian H;
  H.real_symmetric = true;
  H.mat.resize(n, n);
  H.mat.setFromTriplets(trip.begin(), trip.end());
  H.mat.makeCompressed();
  return H;
}

std::pair<SparseHermitian, PoleGauge> assemble_ab_hamiltonian(const Grid& grid,
                                                              const PoleSet& poles) {
  PoleGauge gauge;
  gauge.poles = snap_poles(grid, poles, &gauge.snap_displacement);

  const int n = grid.node_count();
  gauge.theta.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const Point p = grid.nodes()[i].pos;
    double t = 0.0;
    for (const PolePlacement& pole : gauge.poles.poles) {
      t += std::atan2(p.y - pole.position.y, p.x - pole.position.x);
    }
    gauge.theta[i] = t;
  }

  gauge.omega.assign(grid.edges().size(), 0.0);
  const double h2inv = 1.0 / (grid.spacing() * grid.spacing());
  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(static_cast<std::size_t>(n) + 2 * grid.edges().size());
  for (int i = 0; i < n; ++i) trip.emplace_back(i, i, cplx(4.0 * h2inv, 0.0));
  for (std::size_t e = 0; e < grid.edges().size(); ++e) {
    const GridEdge& ed = grid.edges()[e];
    const double w = gauge.poles.empty()
                         ? 0.0
                         : link_phase(gauge.poles, grid.nodes()[ed.a].pos,
                                      grid.nodes()[ed.b].pos);
    gauge.omega[e] = w;
    const cplx hop = w == 0.0 ? cplx(-h2inv, 0.0)
                              : cplx(-h2inv * std::cos(w), h2inv * std::sin(w));
    trip.emplace_back(ed.a, ed.b, hop);          // -exp(-i w)/h^2
    trip.emplace_back(ed.b, ed.a, std::conj(hop));
  }
  SparseHermitian H;
  H.real_symmetric = gauge.poles.empty();
  H.mat.resize(n, n);
  H.mat.setFromTriplets(trip.begin(), trip.end());
  H.mat.makeCompressed();
  return {std::move(H), std::move(gauge)};
}

Eigen::VectorXcd apply_K(const PoleGauge& gauge, const Eigen::VectorXcd& v) {
  if (v.size() != static_cast<Eigen::Index>(gauge.theta.size())) {
    throw ValidationError("apply_K: vector dimension does not match the grid");
  }
  Eigen::VectorXcd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double t = gauge.theta[i];
    out[i] = cplx(std::cos(t), std::sin(t)) * std::conj(v[i]);
  }
  return out;
}

double plaquette_flux(const Grid&, const PoleGauge& gauge, const Plaquette& p) {
  // Counterclockwise circulation: S and E traversed along their orientation,
  // N and W against it.
  return gauge.omega[p.edge[0]] + gauge.omega[p.edge[1]] - gauge.omega[p.edge[2]] -
         gauge.omega[p.edge[3]];
}

int enclosed_pole_count(const Grid& grid, const PoleGauge& gauge, const Plaquette& p) {
  const Shape cell = grid.cell_rect(p.cx, p.cy);
  int count = 0;
  for (const PolePlacement& pole : gauge.poles.poles) {
    if (shape_contains(cell, pole.position)) ++count;
  }
  return count;
}

}  // namespace minpart
