#include "doctest.h"
#include "minpart/grid.hpp"

using namespace minpart;

TEST_CASE("unit square at n=3 gives the 3x3 lattice") {
  const Grid g = build_grid(Domain::square(1.0), 3);
  CHECK(g.spacing() == doctest::Approx(0.25));
  CHECK(g.node_count() == 9);
  CHECK(g.edges().size() == 12);
  CHECK(g.plaquettes().size() == 4);
}

TEST_CASE("disk node sets match direct lattice enumeration") {
  // Reference count by enumerating lattice points with x^2 + y^2 < R^2
  // independently of the Grid walk.
  for (int n : {3, 8, 17}) {
    const double R = 1.0;
    const double h = 2.0 * R / (n + 1);
    int expect = 0;
    for (int iy = 1; iy <= n + 1; ++iy) {
      for (int ix = 1; ix <= n + 1; ++ix) {
        const double x = -R + ix * h, y = -R + iy * h;
        if (x * x + y * y < R * R && std::abs(x) < R && std::abs(y) < R) ++expect;
      }
    }
    const Grid g = build_grid(Domain::disk(R), n);
    CHECK(g.node_count() == expect);
  }
}

TEST_CASE("degenerate resolution raises EmptyGrid") {
  // Thin wedge whose bounding box is lattice-aligned: no lattice point falls
  // strictly inside at coarse resolution.
  const Domain sliver(Polygon{{{0, 0}, {1, 0.9}, {1, 0.95}}});
  CHECK_THROWS_AS(build_grid(sliver, 3), EmptyGrid);
}

TEST_CASE("edges connect lattice-adjacent interior nodes only") {
  const Grid g = build_grid(Domain::disk(1.0), 9);
  for (const GridEdge& e : g.edges()) {
    const GridNode& a = g.nodes()[e.a];
    const GridNode& b = g.nodes()[e.b];
    const int dx = b.ix - a.ix, dy = b.iy - a.iy;
    CHECK(e.a < e.b);
    if (e.horizontal) {
      CHECK(dx == 1);
      CHECK(dy == 0);
    } else {
      CHECK(dx == 0);
      CHECK(dy == 1);
    }
  }
}

TEST_CASE("plaquettes carry their four corners and edges consistently") {
  const Grid g = build_grid(Domain::square(1.0), 5);
  CHECK(g.plaquettes().size() == 16);
  for (const Plaquette& p : g.plaquettes()) {
    for (int e : p.edge) CHECK(e >= 0);
    CHECK(g.node_at(p.cx, p.cy) == p.corner[0]);
    CHECK(g.node_at(p.cx + 1, p.cy) == p.corner[1]);
    CHECK(g.node_at(p.cx + 1, p.cy + 1) == p.corner[2]);
    CHECK(g.node_at(p.cx, p.cy + 1) == p.corner[3]);
  }
}

TEST_CASE("annulus grids resolve the hole or reject it") {
  const Domain annulus(Disk{{0, 0}, 1.0}, {Disk{{0, 0}, 0.3}});
  const Grid g = build_grid(annulus, 15);
  CHECK(g.node_count() > 0);
  for (const GridNode& nd : g.nodes()) {
    CHECK(contains(annulus, nd.pos).region == Region::Interior);
  }

  const Domain fine_hole(Disk{{0, 0}, 1.0}, {Disk{{0.5, 0.0}, 0.05}});
  CHECK_THROWS_AS(build_grid(fine_hole, 6), HoleUnresolved);
}

TEST_CASE("rectangle grids honor the max-extent spacing rule") {
  const Grid g = build_grid(Domain::rectangle(2.0, 1.0), 3);
  CHECK(g.spacing() == doctest::Approx(0.5));
  CHECK(g.node_count() == 3);  // y row at 0.5 only
}
