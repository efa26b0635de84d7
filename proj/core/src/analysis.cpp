#include "orfh/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "orfh/jordan_wigner.hpp"

namespace orfh {

std::size_t count_pauli_terms(const PauliSum& sum) { return sum.term_count(); }

double induced_p_norm(const CoefficientTensors& tensors, int p) {
  if (p != 1 && p != 2)
    throw std::invalid_argument("induced_p_norm: p must be 1 or 2");
  double acc = 0.0;
  auto accumulate = [&](double c) {
    if (c < kCoeffTruncation) return;
    acc += (p == 1) ? c : c * c;
  };
  const int n = tensors.n_spin_orbitals();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      accumulate(std::abs(tensors.one_body()(i, j)));
  for (const auto& [k, v] : tensors.two_body())
    accumulate(0.5 * std::abs(v));
  return (p == 1) ? acc : std::sqrt(acc);
}

StructureReport analyze(const CoefficientTensors& tensors,
                        const std::string& source) {
  StructureReport report;
  report.n_spin_orbitals = tensors.n_spin_orbitals();
  report.pauli_term_count = count_pauli_terms(jordan_wigner(tensors));
  report.one_norm = induced_p_norm(tensors, 1);
  report.two_norm = induced_p_norm(tensors, 2);
  report.source = source;
  return report;
}

}  // namespace orfh
