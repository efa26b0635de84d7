#pragma once

#include <vector>

#include <Eigen/Dense>

#include "orfh/pauli.hpp"

namespace orfh {

inline constexpr int kSparseWidthGuard = 20;

struct GroundStateResult {
  double energy = 0.0;
  Eigen::VectorXcd statevector;  // empty when not requested / over guard
  bool degenerate = false;
  double residual = 0.0;
};

/// k lowest eigenpairs of a hermitian PauliSum, ascending. Dense solve up
/// to kDenseWidthGuard qubits; matrix-free Lanczos with full
/// reorthogonalization up to kSparseWidthGuard. Residuals ||Hv - Ev|| are
/// kept below 1e-9.
std::vector<GroundStateResult> exact_ground_state(const PauliSum& sum, int k);

/// Lanczos with full reorthogonalization on an arbitrary hermitian
/// operator action. Throws on non-convergence after max_iterations.
struct LanczosOptions {
  int max_iterations = 2000;
  double residual_tol = 1e-9;
  std::uint64_t seed = 12345;
};

std::vector<GroundStateResult> lanczos_lowest(
    const PauliSum& sum, int k, const LanczosOptions& options = {});

}  // namespace orfh
