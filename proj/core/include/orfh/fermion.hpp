#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>

#include <Eigen/Dense>

#include "orfh/pauli.hpp"

namespace orfh {

/// Ordering convention for the two-body tensor.
enum class TwoBodyConvention {
  /// H2 = 1/2 sum_pqrs h_pqrs c+_p c_q c+_r c_s
  kPqRs,
  /// H2 = 1/2 sum_pqrs w_pqrs c+_p c+_q c_r c_s
  kNormalOrdered,
};

using TwoBodyKey = std::array<int, 4>;
using TwoBodyMap = std::map<TwoBodyKey, Complex>;

/// One-body matrix and sparse two-body tensor of a second-quantized
/// Hamiltonian on 2N spin-orbitals:
///
///   H = constant + sum_pq h_pq c+_p c_q + (two-body part per convention)
///
/// The original Hubbard tensors are O(N)-sparse; rotated instances fill
/// the tensor densely. One sparse structure serves both.
class CoefficientTensors {
 public:
  CoefficientTensors() = default;
  explicit CoefficientTensors(int n_spin_orbitals);

  int n_spin_orbitals() const { return n_; }
  TwoBodyConvention convention() const { return convention_; }
  void set_convention(TwoBodyConvention c) { convention_ = c; }

  Complex constant() const { return constant_; }
  void set_constant(Complex c) { constant_ = c; }

  const Eigen::MatrixXcd& one_body() const { return one_body_; }
  Eigen::MatrixXcd& one_body() { return one_body_; }

  const TwoBodyMap& two_body() const { return two_body_; }
  Complex two_body_at(int p, int q, int r, int s) const;
  void add_two_body(int p, int q, int r, int s, Complex value);
  void prune_two_body(double threshold = kCoeffTruncation);

  bool is_real(double tol = 0.0) const;

  /// Max violation of h_pq = conj(h_qp) and h_pqrs = conj(h_qpsr).
  double hermiticity_defect() const;

  std::string to_json() const;
  static CoefficientTensors from_json(const std::string& text);

 private:
  int n_ = 0;
  TwoBodyConvention convention_ = TwoBodyConvention::kPqRs;
  Complex constant_{0.0, 0.0};
  Eigen::MatrixXcd one_body_;
  TwoBodyMap two_body_;
};

/// Rewrite kPqRs tensors into the kNormalOrdered convention, absorbing the
/// anticommutator {c_q, c+_r} = delta_qr into one-body corrections. The
/// represented operator is unchanged.
CoefficientTensors normal_order(const CoefficientTensors& tensors);

}  // namespace orfh
