#pragma once

#include <array>
#include <memory>
#include <vector>

#include "minpart/geometry.hpp"

namespace minpart {

struct GridNode {
  int ix = 0;  // lattice column, in units of h from the bounding-box corner
  int iy = 0;
  Point pos;
};

// Edge between lattice-adjacent interior nodes; a < b and the orientation
// a -> b points in +x (horizontal) or +y (vertical).
struct GridEdge {
  int a = -1;
  int b = -1;
  bool horizontal = true;
};

// Unit cell whose four corners are interior nodes. Corner/edge order:
// corners SW, SE, NE, NW; edges S, E, N, W.
struct Plaquette {
  int cx = 0;
  int cy = 0;
  std::array<int, 4> corner{};
  std::array<int, 4> edge{};
};

// Masked uniform lattice over the domain bounding box. Nodes are the lattice
// points strictly inside the domain minus its holes; the Dirichlet condition
// is imposed by omitting exterior neighbors. Immutable after construction.
class Grid {
 public:
  Grid(std::shared_ptr<const Domain> domain, int n);

  double spacing() const { return h_; }
  int subdivisions() const { return n_; }
  const Domain& domain() const { return *domain_; }
  std::shared_ptr<const Domain> domain_ptr() const { return domain_; }

  const std::vector<GridNode>& nodes() const { return nodes_; }
  const std::vector<GridEdge>& edges() const { return edges_; }
  const std::vector<Plaquette>& plaquettes() const { return plaquettes_; }

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int node_at(int ix, int iy) const;        // -1 when absent
  int plaquette_at(int cx, int cy) const;   // -1 when absent
  int right_edge_of(int node) const { return right_edge_[node]; }
  int up_edge_of(int node) const { return up_edge_[node]; }

  Point lattice_point(int ix, int iy) const;
  Point cell_center(int cx, int cy) const;
  // Closed cell square [cx, cx+1] x [cy, cy+1] in lattice units.
  Rect cell_rect(int cx, int cy) const;
  bool cell_in_lattice_range(int cx, int cy) const;

  int max_ix() const { return max_ix_; }
  int max_iy() const { return max_iy_; }

 private:
  std::shared_ptr<const Domain> domain_;
  int n_ = 0;
  double h_ = 0.0;
  Point origin_;  // bounding-box lower-left corner
  int max_ix_ = 0, max_iy_ = 0;
  std::vector<GridNode> nodes_;
  std::vector<GridEdge> edges_;
  std::vector<Plaquette> plaquettes_;
  std::vector<int> node_index_;   // dense (max_ix_+2) x (max_iy_+2) map
  std::vector<int> plaq_index_;   // dense cell map, same stride
  std::vector<int> right_edge_, up_edge_;

  int stride() const { return max_ix_ + 2; }
};

// h = (bounding-box max extent)/(n+1). Throws EmptyGrid when no lattice point
// falls strictly inside, HoleUnresolved when a hole excludes no lattice cell.
Grid build_grid(std::shared_ptr<const Domain> domain, int n);
Grid build_grid(const Domain& domain, int n);

}  // namespace minpart
