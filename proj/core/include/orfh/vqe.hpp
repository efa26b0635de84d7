#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "orfh/pauli.hpp"

namespace orfh {

/// Hardware-efficient ansatz: depth+1 rotation layers (RY then RZ on every
/// qubit) interleaved with nearest-neighbor CZ ladders. Parameter count is
/// 2 * n_qubits * (depth + 1).
struct AnsatzCircuit {
  int n_qubits = 0;
  int depth = 0;

  int parameter_count() const { return 2 * n_qubits * (depth + 1); }
};

enum class VqeOptimizer { kAdam, kLbfgs, kNft, kSpsa };

VqeOptimizer parse_optimizer(const std::string& name);
std::string to_string(VqeOptimizer o);

struct VqeTrajectory {
  std::vector<double> energies;  // one entry per iteration
  double best_energy = 0.0;
  VqeOptimizer optimizer = VqeOptimizer::kAdam;
  std::uint64_t seed = 0;
  std::int64_t evaluations = 0;  // energy evaluations consumed
};

struct VqeOptions {
  // Adam
  double adam_step = 0.05;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  // SPSA gain schedules: a_k = a/(k+1+A)^0.602, c_k = c/(k+1)^0.101
  double spsa_a = 0.2;
  double spsa_c = 0.1;
  // L-BFGS
  int lbfgs_memory = 10;
  double wolfe_c1 = 1e-4;
  double wolfe_c2 = 0.9;
  // Initial parameters uniform on [-init_range, init_range)
  double init_range = 0.1;
};

/// Statevector from |0...0> for the given parameters. n_qubits <= 14.
Eigen::VectorXcd apply_ansatz(const AnsatzCircuit& circuit,
                              const std::vector<double>& parameters);

/// <state|H|state> for a normalized state.
double energy(const PauliSum& sum, const Eigen::VectorXcd& state);

/// Exact gradient via the two-point parameter-shift rule.
std::vector<double> gradient(const PauliSum& sum, const AnsatzCircuit& circuit,
                             const std::vector<double>& parameters);

/// One optimizer run; NFT iterations are full sequential sweeps.
/// Deterministic for a fixed (optimizer, seed, instance).
VqeTrajectory run_vqe(const PauliSum& sum, const AnsatzCircuit& circuit,
                      VqeOptimizer optimizer, std::uint64_t seed,
                      int max_iterations, const VqeOptions& options = {});

}  // namespace orfh
