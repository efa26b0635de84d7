#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "orfh/mpo.hpp"

namespace orfh {

/// Matrix-product state with physical dimension 2. tensors[q][s] is the
/// (left_bond x right_bond) matrix of physical component s on site q.
struct Mps {
  std::vector<std::array<Eigen::MatrixXcd, 2>> tensors;

  int length() const { return static_cast<int>(tensors.size()); }
  Eigen::Index max_bond_dim() const;

  /// Dense statevector (length <= kDenseWidthGuard); qubit q is bit q.
  Eigen::VectorXcd to_statevector() const;
};

struct DmrgOptions {
  int max_bond = 32;
  int sweeps = 12;
  double truncation_cutoff = 1e-12;  // discarded-weight cutoff per split
  double energy_tol = 1e-9;          // sweep-to-sweep convergence
  std::uint64_t seed = 12345;
  int warmup_sweeps = 2;
  int warmup_bond = 8;
  int lanczos_iters = 40;
  double lanczos_tol = 1e-10;
};

struct DmrgResult {
  double energy = 0.0;
  std::vector<double> sweep_energies;
  double truncation_error = 0.0;  // summed discarded weight, final sweep
  bool converged = false;
  Mps state;
};

/// Two-site DMRG ground-state search on the given MPO.
DmrgResult dmrg_run(const Mpo& mpo, const DmrgOptions& options);

/// Energy error |E(D) - reference| for each bond dimension in `bonds`.
std::vector<double> dmrg_error_scan(const Mpo& mpo,
                                    const std::vector<int>& bonds,
                                    double reference_energy,
                                    const DmrgOptions& base);

}  // namespace orfh
