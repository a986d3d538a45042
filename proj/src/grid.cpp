#include "minpart/grid.hpp"

#include <algorithm>
#include <cmath>

namespace minpart {

Grid::Grid(std::shared_ptr<const Domain> domain, int n)
    : domain_(std::move(domain)), n_(n) {
  if (n_ < 1) throw ValidationError("grid subdivision count must be >= 1");
  const Rect bbox = domain_->bounding_box();
  origin_ = bbox.min;
  h_ = std::max(bbox.width, bbox.height) / (n_ + 1);

  // One past the last lattice index that can still fall inside the box.
  max_ix_ = static_cast<int>(std::floor(bbox.width / h_ + 0.5)) + 1;
  max_iy_ = static_cast<int>(std::floor(bbox.height / h_ + 0.5)) + 1;

  node_index_.assign(static_cast<std::size_t>(stride()) * (max_iy_ + 2), -1);
  for (int iy = 1; iy <= max_iy_; ++iy) {
    for (int ix = 1; ix <= max_ix_; ++ix) {
      const Point p = lattice_point(ix, iy);
      if (contains(*domain_, p).region == Region::Interior) {
        node_index_[static_cast<std::size_t>(iy) * stride() + ix] =
            static_cast<int>(nodes_.size());
        nodes_.push_back({ix, iy, p});
      }
    }
  }
  if (nodes_.empty()) {
    throw EmptyGrid("no interior lattice point at n=" + std::to_string(n_));
  }

  right_edge_.assign(nodes_.size(), -1);
  up_edge_.assign(nodes_.size(), -1);
  for (int id = 0; id < node_count(); ++id) {
    const GridNode& nd = nodes_[id];
    if (int r = node_at(nd.ix + 1, nd.iy); r >= 0) {
      right_edge_[id] = static_cast<int>(edges_.size());
      edges_.push_back({id, r, true});
    }
    if (int u = node_at(nd.ix, nd.iy + 1); u >= 0) {
      up_edge_[id] = static_cast<int>(edges_.size());
      edges_.push_back({id, u, false});
    }
  }

  plaq_index_.assign(node_index_.size(), -1);
  for (int cy = 1; cy < max_iy_; ++cy) {
    for (int cx = 1; cx < max_ix_; ++cx) {
      const int sw = node_at(cx, cy);
      const int se = node_at(cx + 1, cy);
      const int ne = node_at(cx + 1, cy + 1);
      const int nw = node_at(cx, cy + 1);
      if (sw < 0 || se < 0 || ne < 0 || nw < 0) continue;
      Plaquette pl;
      pl.cx = cx;
      pl.cy = cy;
      pl.corner = {sw, se, ne, nw};
      pl.edge = {right_edge_[sw], up_edge_[se], right_edge_[nw], up_edge_[sw]};
      plaq_index_[static_cast<std::size_t>(cy) * stride() + cx] =
          static_cast<int>(plaquettes_.size());
      plaquettes_.push_back(pl);
    }
  }

  // A hole that excludes no lattice cell is numerically invisible: a pole
  // "inside" it would act like an in-domain pole.
  for (const Hole& hole : domain_->holes()) {
    bool resolved = false;
    const Rect hb = shape_bounding_box(hole.shape);
    const int cx0 = std::max(0, static_cast<int>(std::floor((hb.min.x - origin_.x) / h_)) - 1);
    const int cy0 = std::max(0, static_cast<int>(std::floor((hb.min.y - origin_.y) / h_)) - 1);
    const int cx1 = std::min(max_ix_, static_cast<int>(std::ceil((hb.min.x + hb.width - origin_.x) / h_)) + 1);
    const int cy1 = std::min(max_iy_, static_cast<int>(std::ceil((hb.min.y + hb.height - origin_.y) / h_)) + 1);
    for (int cy = cy0; cy <= cy1 && !resolved; ++cy) {
      for (int cx = cx0; cx <= cx1 && !resolved; ++cx) {
        if (plaquette_at(cx, cy) >= 0) continue;
        const Membership m = contains(*domain_, cell_center(cx, cy));
        if (m.region == Region::InHole && m.hole_index == hole.index) resolved = true;
      }
    }
    if (!resolved) {
      throw HoleUnresolved("hole " + std::to_string(hole.index) +
                           " excludes no lattice cell at n=" + std::to_string(n_));
    }
  }
}

int Grid::node_at(int ix, int iy) const {
  if (ix < 0 || iy < 0 || ix > max_ix_ + 1 || iy > max_iy_ + 1) return -1;
  return node_index_[static_cast<std::size_t>(iy) * stride() + ix];
}

int Grid::plaquette_at(int cx, int cy) const {
  if (cx < 0 || cy < 0 || cx > max_ix_ + 1 || cy > max_iy_ + 1) return -1;
  return plaq_index_[static_cast<std::size_t>(cy) * stride() + cx];
}

Point Grid::lattice_point(int ix, int iy) const {
  return {origin_.x + ix * h_, origin_.y + iy * h_};
}

Point Grid::cell_center(int cx, int cy) const {
  return {origin_.x + (cx + 0.5) * h_, origin_.y + (cy + 0.5) * h_};
}

Rect Grid::cell_rect(int cx, int cy) const {
  return Rect{lattice_point(cx, cy), h_, h_};
}

bool Grid::cell_in_lattice_range(int cx, int cy) const {
  return cx >= 0 && cy >= 0 && cx <= max_ix_ && cy <= max_iy_;
}

Grid build_grid(std::shared_ptr<const Domain> domain, int n) {
  return Grid(std::move(domain), n);
}

Grid build_grid(const Domain& domain, int n) {
  return Grid(std::make_shared<Domain>(domain), n);
}

}  // namespace minpart
