#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/SparseCore>

#include "minpart/grid.hpp"

namespace minpart {

using cplx = std::complex<double>;
using SparseMatrixC = Eigen::SparseMatrix<cplx>;

// Sparse self-adjoint operator; entries are assembled once per ordered pair
// so the matrix equals its conjugate transpose exactly.
struct SparseHermitian {
  SparseMatrixC mat;
  bool real_symmetric = true;
};

// Discrete gauge data for a pole configuration. For the edge a -> b,
// omega[e] is the line integral of the vector potential along the edge, and
// theta[i] is the summed principal polar angle of node i around all poles,
// so that omega[e] = (continued theta(b) - theta(a)) / 2 along the edge.
struct PoleGauge {
  PoleSet poles;                          // snapped positions
  std::vector<double> theta;              // per node
  std::vector<double> omega;              // per edge, orientation a -> b
  std::vector<double> snap_displacement;  // per pole
};

// Line integral of the half-flux potential along the directed segment a -> b:
// the sum over poles of half the principal subtended angle. Throws PoleOnEdge
// when a pole lies within 1e-12 * |b-a| of the closed segment.
double link_phase(const PoleSet& poles, Point a, Point b);

// Snaps in-domain poles to the nearest plaquette center and in-hole poles to
// the nearest excluded cell center inside their hole. Ties broken toward the
// lexicographically smallest (x, y) center.
PoleSet snap_poles(const Grid& grid, const PoleSet& poles,
                   std::vector<double>* displacement = nullptr);

// 5-point Dirichlet Laplacian: diagonal 4/h^2, off-diagonal -1/h^2 per edge.
SparseHermitian assemble_laplacian(const Grid& grid);

// Peierls substitution: diagonal 4/h^2, entry (a, b) for the edge a -> b is
// -exp(-i omega_e)/h^2. With an empty pole set the output equals
// assemble_laplacian exactly.
std::pair<SparseHermitian, PoleGauge> assemble_ab_hamiltonian(const Grid& grid,
                                                              const PoleSet& poles);

// Antilinear symmetry (K v)_i = exp(i theta_i) conj(v_i); an isometric
// involution commuting with the assembled Hamiltonian.
Eigen::VectorXcd apply_K(const PoleGauge& gauge, const Eigen::VectorXcd& v);

// Oriented phase circulation around a plaquette (counterclockwise). Equals
// pi times the enclosed-pole parity, modulo 2 pi.
double plaquette_flux(const Grid& grid, const PoleGauge& gauge, const Plaquette& p);

// Number of poles whose position lies strictly inside the plaquette square.
int enclosed_pole_count(const Grid& grid, const PoleGauge& gauge, const Plaquette& p);

}  // namespace minpart
