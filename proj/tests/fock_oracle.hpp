#pragma once

// Independent dense Fock-space construction used as the reference for the
// Jordan-Wigner pipeline. Builds the Hamiltonian matrix directly from
// ladder-operator action on occupation bitstrings; shares no code with the
// Pauli-algebra path.

#include <bit>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "orfh/fermion.hpp"

namespace orfh::testing {

struct FockKet {
  std::uint64_t bits;
  Complex amp;
};

// c_p (dagger=false) or c+_p (dagger=true) acting on one basis ket.
inline std::optional<FockKet> ladder(std::uint64_t bits, int p, bool dagger,
                                     Complex amp) {
  const std::uint64_t mask = std::uint64_t{1} << p;
  const bool occupied = bits & mask;
  if (dagger == occupied) return std::nullopt;
  const int parity =
      std::popcount(bits & (mask - 1));  // modes below p, JW sign
  return FockKet{bits ^ mask, (parity & 1) ? -amp : amp};
}

inline Eigen::MatrixXcd fock_matrix(const CoefficientTensors& tensors) {
  const int n = tensors.n_spin_orbitals();
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  h.diagonal().array() += tensors.constant();

  const bool normal = tensors.convention() == TwoBodyConvention::kNormalOrdered;
  for (std::uint64_t b = 0; b < dim; ++b) {
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const Complex v = tensors.one_body()(p, q);
        if (v == Complex{0.0, 0.0}) continue;
        auto k1 = ladder(b, q, false, v);
        if (!k1) continue;
        auto k2 = ladder(k1->bits, p, true, k1->amp);
        if (k2) h(k2->bits, b) += k2->amp;
      }
    for (const auto& [key, v] : tensors.two_body()) {
      const auto [p, q, r, s] = std::array{key[0], key[1], key[2], key[3]};
      // kPqRs: c+_p c_q c+_r c_s; kNormalOrdered: c+_p c+_q c_r c_s.
      const std::array<std::pair<int, bool>, 4> ops =
          normal ? std::array<std::pair<int, bool>, 4>{{{p, true},
                                                        {q, true},
                                                        {r, false},
                                                        {s, false}}}
                 : std::array<std::pair<int, bool>, 4>{{{p, true},
                                                        {q, false},
                                                        {r, true},
                                                        {s, false}}};
      std::optional<FockKet> ket = FockKet{b, 0.5 * v};
      for (int i = 3; i >= 0 && ket; --i)
        ket = ladder(ket->bits, ops[i].first, ops[i].second, ket->amp);
      if (ket) h(ket->bits, b) += ket->amp;
    }
  }
  return h;
}

inline double fock_ground_energy(const CoefficientTensors& tensors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(fock_matrix(tensors));
  return es.eigenvalues()(0);
}

}  // namespace orfh::testing
