#include "orfh/exact.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace orfh {

namespace {

constexpr double kDegeneracyTol = 1e-9;

std::vector<GroundStateResult> dense_lowest(const PauliSum& sum, int k) {
  const Eigen::MatrixXcd h = pauli_matrix(sum);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const auto& evals = solver.eigenvalues();
  std::vector<GroundStateResult> out;
  for (int i = 0; i < k && i < evals.size(); ++i) {
    GroundStateResult r;
    r.energy = evals[i];
    r.statevector = solver.eigenvectors().col(i);
    r.residual = (h * r.statevector - r.energy * r.statevector).norm();
    const bool lower = i > 0 && evals[i] - evals[i - 1] < kDegeneracyTol;
    const bool upper =
        i + 1 < evals.size() && evals[i + 1] - evals[i] < kDegeneracyTol;
    r.degenerate = lower || upper;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<GroundStateResult> lanczos_lowest(const PauliSum& sum, int k,
                                              const LanczosOptions& options) {
  const int w = sum.width();
  if (w > kSparseWidthGuard)
    throw std::invalid_argument("lanczos_lowest: width over guard");
  const std::size_t dim = std::size_t{1} << w;

  std::mt19937_64 gen(options.seed);
  Eigen::VectorXcd v0(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double re = static_cast<double>(gen() >> 11) * 0x1.0p-53 - 0.5;
    const double im = static_cast<double>(gen() >> 11) * 0x1.0p-53 - 0.5;
    v0[i] = Complex(re, im);
  }
  v0.normalize();

  std::vector<Eigen::VectorXcd> basis;
  std::vector<double> alphas, betas;
  Eigen::VectorXcd v = v0;
  Eigen::VectorXcd w_vec;
  std::vector<GroundStateResult> out;

  const int max_iter =
      std::min<int>(options.max_iterations, static_cast<int>(dim));
  for (int iter = 0; iter < max_iter; ++iter) {
    basis.push_back(v);
    w_vec = orfh::apply(sum, v);
    const double alpha = std::real(v.dot(w_vec));
    alphas.push_back(alpha);
    w_vec -= alpha * v;
    if (!betas.empty()) w_vec -= betas.back() * basis[basis.size() - 2];
    // Full reorthogonalization against the whole Krylov basis.
    for (const auto& b : basis) w_vec -= b.dot(w_vec) * b;
    for (const auto& b : basis) w_vec -= b.dot(w_vec) * b;

    const int m = static_cast<int>(alphas.size());
    const bool check = (m >= k + 2 && m % 10 == 0) || iter == max_iter - 1 ||
                       w_vec.norm() < 1e-14;
    if (check) {
      Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
      for (int i = 0; i < m; ++i) {
        tri(i, i) = alphas[i];
        if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = betas[i];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ts(tri);
      bool all_converged = true;
      out.clear();
      for (int j = 0; j < k && j < m; ++j) {
        GroundStateResult r;
        r.energy = ts.eigenvalues()[j];
        Eigen::VectorXcd ritz = Eigen::VectorXcd::Zero(dim);
        for (int i = 0; i < m; ++i)
          ritz += ts.eigenvectors()(i, j) * basis[i];
        ritz.normalize();
        r.statevector = ritz;
        r.residual = (orfh::apply(sum, ritz) - r.energy * ritz).norm();
        if (r.residual > options.residual_tol) all_converged = false;
        if (j + 1 < m &&
            ts.eigenvalues()[j + 1] - ts.eigenvalues()[j] < kDegeneracyTol)
          r.degenerate = true;
        out.push_back(std::move(r));
      }
      if (all_converged && static_cast<int>(out.size()) >= std::min<int>(k, m))
        return out;
      if (w_vec.norm() < 1e-14) return out;  // Krylov space exhausted
    }
    const double beta = w_vec.norm();
    if (beta < 1e-14) break;
    betas.push_back(beta);
    v = w_vec / beta;
  }
  throw std::runtime_error("lanczos_lowest: no convergence within " +
                           std::to_string(options.max_iterations) +
                           " iterations");
}

std::vector<GroundStateResult> exact_ground_state(const PauliSum& sum, int k) {
  // Dense up to 12 qubits (memory bound); Lanczos beyond.
  if (sum.width() <= 12) return dense_lowest(sum, k);
  if (sum.width() <= kSparseWidthGuard) return lanczos_lowest(sum, k);
  throw std::invalid_argument("exact_ground_state: width " +
                              std::to_string(sum.width()) +
                              " exceeds sparse guard " +
                              std::to_string(kSparseWidthGuard));
}

}  // namespace orfh
