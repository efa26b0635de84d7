#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "orfh/pauli.hpp"

namespace orfh {

/// One MPO site tensor, physical dimension 2. mats[s_out * 2 + s_in] is the
/// (left_bond x right_bond) matrix of that physical component.
struct MpoTensor {
  std::array<Eigen::MatrixXcd, 4> mats;

  Eigen::Index left_dim() const { return mats[0].rows(); }
  Eigen::Index right_dim() const { return mats[0].cols(); }
};

struct Mpo {
  std::vector<MpoTensor> sites;
  double compression_residual = 0.0;

  int length() const { return static_cast<int>(sites.size()); }
  Eigen::Index max_bond_dim() const;
};

/// MPO for the sum, built by iterative term-batch direct sums with SVD
/// recompression after each batch.
Mpo compile_mpo(const PauliSum& sum, double tolerance = 1e-12);

/// Two-pass sweep compression (QR left-to-right, truncating SVD back).
void compress_mpo(Mpo& mpo, double tolerance);

/// Matrix element <bra|M|ket> of computational basis states given as
/// bitstrings (qubit k = bit k).
Complex mpo_element(const Mpo& mpo, std::uint64_t bra, std::uint64_t ket);

/// Dense matrix of a small MPO (length <= kDenseWidthGuard).
Eigen::MatrixXcd mpo_matrix(const Mpo& mpo);

}  // namespace orfh
