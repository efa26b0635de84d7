#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "orfh/fermion.hpp"
#include "orfh/pauli.hpp"

namespace orfh {

enum class GroupingMethod { kQubitwise, kGeneralCommuting, kBasisRotation };

std::string to_string(GroupingMethod m);

/// One simultaneously measurable set. QWC/GC groups index into the
/// canonical term order of the source PauliSum. Basis-rotation groups
/// carry their observable directly (a rotated-frame product of number
/// operators) plus the diagonalizing single-particle basis.
struct MeasurementGroup {
  std::vector<std::size_t> term_indices;
  std::optional<PauliSum> observable;
  std::optional<Eigen::MatrixXcd> rotation_basis;
  std::string prescription;
};

struct Grouping {
  GroupingMethod method = GroupingMethod::kQubitwise;
  int width = 0;
  std::vector<MeasurementGroup> groups;
};

struct ShotEstimate {
  double k_factor = 0.0;
  double epsilon = 0.0;
  double shots = 0.0;  // K / epsilon^2
  std::vector<double> group_variances;
};

/// Greedy coloring of the qubitwise-anticompatibility graph, vertices in
/// descending |coefficient| order (ties by canonical string order).
Grouping group_qubitwise(const PauliSum& sum);

/// Same heuristic on the operator anticommutation graph.
Grouping group_general_commuting(const PauliSum& sum);

/// Double factorization of the two-body tensor on its (pq),(rs) reshape:
/// eigendecomposition when the reshape is hermitian, SVD pairing
/// otherwise; factors below 1e-10 are truncated. One group per retained
/// factor plus one for the one-body part.
Grouping group_basis_rotation(const CoefficientTensors& tensors);

/// Observable of a group (hermitized; identity offset dropped).
PauliSum group_observable(const MeasurementGroup& group, const PauliSum& sum);

/// Optimal-allocation shot estimate
///   K = [sum_G sqrt(Var(O_G))]^2,  M = K / epsilon^2
/// with group variances evaluated exactly on the given state. Negative
/// variances beyond -1e-10 throw; smaller ones are clamped to zero.
ShotEstimate estimate_shots(const Grouping& grouping, const PauliSum& sum,
                            const Eigen::VectorXcd& state, double epsilon);

}  // namespace orfh
