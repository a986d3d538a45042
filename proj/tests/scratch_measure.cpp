// Scratch experiments for discretization behavior; not part of the suites.
#include <cstdio>
#include <string>

#include "minpart/eigensolve.hpp"

using namespace minpart;

static void disk_center_pole(int n, int m) {
  const Domain d = Domain::disk(1.0);
  const Grid g = build_grid(d, n);
  auto [H, gauge] = assemble_ab_hamiltonian(g, validate_pole_set(d, {{0.0, 0.0}}));
  SolverOptions opt;
  opt.m = m;
  opt.tol = 1e-9;
  opt.max_iter = 2000;
  const Spectrum s = lowest_eigenpairs(H, opt);
  std::printf("disk n=%4d  pole snapped to (% .5f, % .5f) disp=%.5f h=%.5f\n", n,
              gauge.poles.poles[0].position.x, gauge.poles.poles[0].position.y,
              gauge.snap_displacement[0], g.spacing());
  std::printf("  evals:");
  for (double v : s.eigenvalues) std::printf(" %.6f", v);
  std::printf("\n  gaps: 12: %.3e  34: %.3e  (rel: %.3e, %.3e)\n",
              s.eigenvalues[1] - s.eigenvalues[0], s.eigenvalues[3] - s.eigenvalues[2],
              (s.eigenvalues[1] - s.eigenvalues[0]) / s.eigenvalues[0],
              (s.eigenvalues[3] - s.eigenvalues[2]) / s.eigenvalues[2]);
}

static void disk_no_pole(int n) {
  const Domain d = Domain::disk(1.0);
  const Grid g = build_grid(d, n);
  SolverOptions opt;
  opt.m = 1;
  const Spectrum s = lowest_eigenpairs(assemble_laplacian(g), opt);
  std::printf("disk n=%4d  lambda1=%.6f (j01^2=5.783186)\n", n, s.eigenvalues[0]);
}

static void square_boundary_pole(int n) {
  const Domain d = Domain::square(1.0);
  const Grid g = build_grid(d, n);
  SolverOptions opt;
  opt.m = 6;
  opt.tol = 1e-10;
  opt.max_iter = 2000;
  const Spectrum plain = lowest_eigenpairs(assemble_laplacian(g), opt);
  const double h = g.spacing();
  // Pole in the outermost plaquette next to the bottom boundary, on the
  // nodal line x = 1/2 of the fourth eigenfunction, and mid-edge variant.
  const Point candidates[] = {{0.5 + h / 2, 1.5 * h}, {0.5 + h / 2, h / 2 + h},
                              {1.5 * h, 1.5 * h},     {0.25, 0.25},
                              {0.5 + h / 2, 0.5 + h / 2}};
  for (const Point& c : candidates) {
    auto [H, gauge] = assemble_ab_hamiltonian(g, validate_pole_set(d, {c}));
    const Spectrum s = lowest_eigenpairs(H, opt);
    std::printf(
        "square n=%3d pole (%.4f,%.4f): l4 %.6f vs plain %.6f  diff % .3e | l1-l6:", n,
        gauge.poles.poles[0].position.x, gauge.poles.poles[0].position.y,
        s.eigenvalues[3], plain.eigenvalues[3], s.eigenvalues[3] - plain.eigenvalues[3]);
    for (double v : s.eigenvalues) std::printf(" %.4f", v);
    std::printf("\n");
  }
  std::printf("  plain l1-l6:");
  for (double v : plain.eigenvalues) std::printf(" %.4f", v);
  std::printf("\n");
}

int main(int argc, char** argv) {
  const std::string what = argc > 1 ? argv[1] : "all";
  if (what == "split" || what == "all") {
    disk_center_pole(63, 6);
    disk_center_pole(64, 6);
    disk_center_pole(127, 6);
    disk_center_pole(128, 6);
  }
  if (what == "split-fine") {
    disk_center_pole(254, 8);
    disk_center_pole(255, 8);
  }
  if (what == "disk" || what == "all") {
    disk_no_pole(63);
    disk_no_pole(127);
  }
  if (what == "bdpole" || what == "all") {
    square_boundary_pole(31);
    square_boundary_pole(63);
  }
  return 0;
}
