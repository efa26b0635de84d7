#pragma once

#include <string>

#include "orfh/fermion.hpp"
#include "orfh/pauli.hpp"

namespace orfh {

struct StructureReport {
  int n_spin_orbitals = 0;
  std::size_t pauli_term_count = 0;
  double one_norm = 0.0;
  double two_norm = 0.0;
  std::string source;  // ORFH | FH | FCIDUMP
};

/// Number of non-identity terms in a merged, truncated sum.
std::size_t count_pauli_terms(const PauliSum& sum);

/// Induced p-norm (sum_i |c_i|^p)^(1/p) over the canonical coefficient
/// list: all nonzero one-body entries h_pq and the two-body entries
/// h_pqrs / 2, i.e. the coefficients as they multiply operator products.
/// p must be 1 or 2.
double induced_p_norm(const CoefficientTensors& tensors, int p);

StructureReport analyze(const CoefficientTensors& tensors,
                        const std::string& source);

}  // namespace orfh
