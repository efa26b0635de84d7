#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "orfh/fermion.hpp"

namespace orfh {

/// PRNG identifier baked into instance descriptors. The generator is
/// mt19937_64 (fully specified by the C++ standard) with an explicit
/// Box-Muller transform, so instances regenerate bit-identically from the
/// seed across platforms.
inline constexpr const char* kPrngId = "mt19937_64-boxmuller-v1";

/// Spin-involved single-particle basis rotation on 2N spin-orbitals.
struct OrbitalRotation {
  int dimension = 0;
  Eigen::MatrixXcd matrix;  // u_{ik}
  std::uint64_t seed = 0;
  bool real_flag = false;

  /// Max |u u+ - I|.
  double unitarity_defect() const;
};

/// Haar-distributed unitary (or real orthogonal when real_flag) via QR of
/// a seeded Gaussian matrix with R-diagonal phase correction. Deterministic
/// for a fixed seed. Dimension must be even and >= 4.
OrbitalRotation sample_rotation(int dimension, std::uint64_t seed,
                                bool real_flag);

/// Conjugate the Hamiltonian by the rotation: every c+_k is replaced by the
/// rotated-mode operator sum_p u_{kp} c+_p. Works for arbitrary kPqRs
/// tensors; the identity rotation returns the input entrywise.
CoefficientTensors rotate(const CoefficientTensors& tensors,
                          const OrbitalRotation& rotation);

}  // namespace orfh
