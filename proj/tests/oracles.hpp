#pragma once

// Independent references used by the tests: closed-form spectra on lattice
// rectangles and Bessel zeros for the disk. These never call into the
// implementation paths they certify.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace oracles {

// Discrete Dirichlet spectrum of the 5-point Laplacian on an nx-by-ny lattice
// rectangle with spacing h: (4/h^2)(sin^2(m pi h / (2 Lx+2h...)) ...) written
// via mode indices directly.
inline std::vector<double> lattice_rectangle_spectrum(int nx, int ny, double h,
                                                      int count) {
  std::vector<double> all;
  all.reserve(static_cast<std::size_t>(nx) * ny);
  for (int m = 1; m <= nx; ++m) {
    for (int l = 1; l <= ny; ++l) {
      const double sx = std::sin(0.5 * M_PI * m / (nx + 1));
      const double sy = std::sin(0.5 * M_PI * l / (ny + 1));
      all.push_back(4.0 / (h * h) * (sx * sx + sy * sy));
    }
  }
  std::sort(all.begin(), all.end());
  all.resize(std::min<std::size_t>(all.size(), count));
  return all;
}

// Continuum rectangle spectrum pi^2 (m^2/w^2 + l^2/h^2).
inline std::vector<double> rectangle_spectrum(double w, double h, int count) {
  std::vector<double> all;
  for (int m = 1; m <= count; ++m) {
    for (int l = 1; l <= count; ++l) {
      all.push_back(M_PI * M_PI * (m * m / (w * w) + l * l / (h * h)));
    }
  }
  std::sort(all.begin(), all.end());
  all.resize(count);
  return all;
}

// k-th positive zero of the Bessel function J_nu, by sampling + bisection.
inline double bessel_zero(double nu, int k) {
  double x = std::max(1.0, nu);
  double prev = std::cyl_bessel_j(nu, x);
  int found = 0;
  const double step = 0.01;
  for (int i = 0; i < 400000; ++i) {
    const double xn = x + step;
    const double cur = std::cyl_bessel_j(nu, xn);
    if ((prev < 0) != (cur < 0)) {
      ++found;
      if (found == k) {
        double lo = x, hi = xn;
        for (int it = 0; it < 200; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double fm = std::cyl_bessel_j(nu, mid);
          if ((fm < 0) == (prev < 0)) {
            lo = mid;
          } else {
            hi = mid;
          }
        }
        return 0.5 * (lo + hi);
      }
    }
    prev = cur;
    x = xn;
  }
  throw std::runtime_error("bessel_zero: root not bracketed");
}

}  // namespace oracles
