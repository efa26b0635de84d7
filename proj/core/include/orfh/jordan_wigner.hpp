#pragma once

#include <vector>

#include "orfh/fermion.hpp"
#include "orfh/pauli.hpp"

namespace orfh {

/// One creation (dagger) or annihilation operator on a fermionic mode.
struct LadderOp {
  int mode;
  bool dagger;
};

/// Jordan-Wigner image of a single ladder operator:
///   c+_j -> 1/2 (X_j - i Y_j) Z_{j-1} ... Z_0
/// with qubit k identified with spin-orbital k.
PauliSum jw_ladder(const LadderOp& op, int width);

/// Jordan-Wigner image of coeff * (product of ladder operators).
PauliSum jw_product(const std::vector<LadderOp>& ops, Complex coeff, int width);

/// Map the full Hamiltonian to a merged, truncated PauliSum on 2N qubits.
PauliSum jordan_wigner(const CoefficientTensors& tensors);

}  // namespace orfh
