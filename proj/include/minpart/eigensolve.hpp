#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "minpart/magnetics.hpp"

namespace minpart {

struct SolverOptions {
  int m = 6;                // number of lowest eigenpairs
  double tol = 1e-9;        // residual tolerance, relative to max(1, lambda)
  int max_iter = 500;
  std::uint64_t seed = 0;
  const Eigen::MatrixXcd* warm_start = nullptr;  // optional initial block
};

// Sorted lowest eigenpairs with certified residuals. Vectors are orthonormal
// columns; clusters group indices whose consecutive relative gaps fall below
// the clustering threshold.
struct Spectrum {
  std::vector<double> eigenvalues;
  Eigen::MatrixXcd vectors;
  std::vector<double> residuals;
  std::vector<std::vector<int>> clusters;
};

// Shift-invert subspace iteration around sigma = 0 with a sparse Cholesky
// factorization; deterministic for a fixed seed. Throws NoConvergence when
// the iteration budget runs out.
Spectrum lowest_eigenpairs(const SparseHermitian& H, const SolverOptions& opt);

// Maximal runs of eigenvalues with consecutive gaps
// |l_{i+1} - l_i| <= delta * max(1, l_i).
std::vector<std::vector<int>> cluster_degenerate(const std::vector<double>& eigenvalues,
                                                 double delta = 1e-4);

}  // namespace minpart
