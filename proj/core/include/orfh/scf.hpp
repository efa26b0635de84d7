#pragma once

#include <Eigen/Dense>

#include "orfh/fermion.hpp"

namespace orfh {

struct ScfResult {
  double hf_energy = 0.0;
  Eigen::MatrixXcd orbital_coefficients;  // columns orthonormal
  int occupations = 0;                    // electron count
  bool converged = false;
  int iterations = 0;
};

struct ScfOptions {
  int max_iterations = 500;
  double density_tol = 1e-10;
  double mixing = 0.5;
  std::uint64_t seed = 0;  // base seed for randomized starts
};

/// Generalized (spin-orbital) Hartree-Fock over the full 2N modes. The
/// rotated model mixes spin, so no spin-blocking is assumed. Electron
/// number is fixed by aufbau filling each iteration; the best (lowest
/// converged energy) of `attempts` randomized starts is returned, ties
/// broken by attempt index.
ScfResult run_ghf(const CoefficientTensors& tensors, int n_electrons,
                  int attempts = 8, const ScfOptions& options = {});

/// E_corr = E_exact - E_HF (non-positive by the variational bound).
double correlation_energy(double e_exact, double e_hf);

}  // namespace orfh
