#include "minpart/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>

namespace minpart {

namespace {

Eigen::MatrixXcd seeded_block(Eigen::Index n, Eigen::Index b, std::uint64_t seed) {
  std::mt19937_64 gen(seed ^ 0x9e3779b97f4a7c15ull);
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::MatrixXcd V(n, b);
  for (Eigen::Index j = 0; j < b; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      V(i, j) = cplx(dist(gen), dist(gen));
    }
  }
  return V;
}

Eigen::MatrixXcd thin_q(const Eigen::MatrixXcd& Z) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(Z);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(Z.rows(), Z.cols());
}

}  // namespace

Spectrum lowest_eigenpairs(const SparseHermitian& H, const SolverOptions& opt) {
  const Eigen::Index n = H.mat.rows();
  if (opt.m < 1 || opt.m > n) {
    throw ValidationError("lowest_eigenpairs: m must lie in [1, dim]");
  }
  const Eigen::Index m = opt.m;
  const Eigen::Index b = std::min<Eigen::Index>(n, m + 8);

  Eigen::SimplicialLLT<SparseMatrixC, Eigen::Lower> llt;
  llt.compute(H.mat);
  Eigen::SparseLU<SparseMatrixC> lu;
  const bool use_llt = llt.info() == Eigen::Success;
  if (!use_llt) {
    lu.compute(H.mat);
    if (lu.info() != Eigen::Success) {
      throw NumericalError("sparse factorization failed");
    }
  }
  auto solve = [&](const Eigen::MatrixXcd& X) {
    return use_llt ? Eigen::MatrixXcd(llt.solve(X)) : Eigen::MatrixXcd(lu.solve(X));
  };

  Eigen::MatrixXcd V;
  if (opt.warm_start && opt.warm_start->rows() == n) {
    V = *opt.warm_start;
    if (V.cols() < b) {
      Eigen::MatrixXcd pad = seeded_block(n, b - V.cols(), opt.seed + 1);
      Eigen::MatrixXcd full(n, b);
      full << V, pad;
      V = std::move(full);
    } else if (V.cols() > b) {
      V = V.leftCols(b).eval();
    }
  } else {
    V = seeded_block(n, b, opt.seed);
  }
  V = thin_q(V);

  Eigen::VectorXd eigs(b);
  Eigen::MatrixXcd W;
  double worst = std::numeric_limits<double>::infinity();
  for (int it = 0; it < opt.max_iter; ++it) {
    V = thin_q(solve(V));
    W = H.mat * V;
    Eigen::MatrixXcd S = V.adjoint() * W;
    S = 0.5 * (S + S.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(S);
    if (es.info() != Eigen::Success) throw NumericalError("dense Ritz solve failed");
    V = (V * es.eigenvectors()).eval();
    W = (W * es.eigenvectors()).eval();
    eigs = es.eigenvalues();

    worst = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      const double res = (W.col(i) - eigs[i] * V.col(i)).norm() /
                         std::max(1.0, std::abs(eigs[i]));
      worst = std::max(worst, res);
    }
    if (worst <= opt.tol) {
      Spectrum out;
      out.eigenvalues.assign(eigs.data(), eigs.data() + m);
      out.vectors = V.leftCols(m);
      out.residuals.resize(m);
      for (Eigen::Index i = 0; i < m; ++i) {
        out.residuals[i] = (W.col(i) - eigs[i] * V.col(i)).norm();
      }
      out.clusters = cluster_degenerate(out.eigenvalues);
      return out;
    }
  }
  throw NoConvergence("eigensolver: residual " + std::to_string(worst) +
                          " above tolerance after " + std::to_string(opt.max_iter) +
                          " iterations",
                      worst);
}

std::vector<std::vector<int>> cluster_degenerate(const std::vector<double>& eigenvalues,
                                                 double delta) {
  std::vector<std::vector<int>> clusters;
  for (int i = 0; i < static_cast<int>(eigenvalues.size()); ++i) {
    if (!clusters.empty()) {
      const int prev = clusters.back().back();
      if (std::abs(eigenvalues[i] - eigenvalues[prev]) <=
          delta * std::max(1.0, std::abs(eigenvalues[prev]))) {
        clusters.back().push_back(i);
        continue;
      }
    }
    clusters.push_back({i});
  }
  return clusters;
}

}  // namespace minpart
