#include "orfh/grouping.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "orfh/jordan_wigner.hpp"

namespace orfh {

namespace {

constexpr double kFactorTruncation = 1e-10;
constexpr double kVarianceGuard = 1e-10;

std::vector<std::pair<PauliString, Complex>> ordered_terms(
    const PauliSum& sum) {
  return {sum.terms().begin(), sum.terms().end()};
}

using Compatible = bool (*)(const PauliString&, const PauliString&);

Grouping greedy_color(const PauliSum& sum, GroupingMethod method,
                      Compatible compatible) {
  const auto terms = ordered_terms(sum);
  // Visit in descending |coefficient|; ties fall back to the canonical
  // string order already present in the term list.
  std::vector<std::size_t> order(terms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return std::abs(terms[a].second) >
                            std::abs(terms[b].second);
                   });

  Grouping grouping;
  grouping.method = method;
  grouping.width = sum.width();
  for (std::size_t idx : order) {
    bool placed = false;
    for (auto& group : grouping.groups) {
      bool ok = true;
      for (std::size_t member : group.term_indices) {
        if (!compatible(terms[idx].first, terms[member].first)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        group.term_indices.push_back(idx);
        placed = true;
        break;
      }
    }
    if (!placed) {
      MeasurementGroup g;
      g.term_indices.push_back(idx);
      g.prescription = method == GroupingMethod::kQubitwise
                           ? "single-qubit basis change"
                           : "joint eigenbasis (entangling basis change)";
      grouping.groups.push_back(std::move(g));
    }
  }
  for (auto& group : grouping.groups)
    std::sort(group.term_indices.begin(), group.term_indices.end());
  return grouping;
}

CoefficientTensors factor_tensors(int n, double scale,
                                  const Eigen::VectorXcd& left,
                                  const Eigen::VectorXcd& right) {
  CoefficientTensors t(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const Complex lw = left[p * n + q];
      if (std::abs(lw) < kCoeffTruncation) continue;
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const Complex v = scale * lw * std::conj(right[r * n + s]);
          if (std::abs(v) >= kCoeffTruncation)
            t.add_two_body(p, q, r, s, v);
        }
    }
  return t;
}

Eigen::MatrixXcd hermitian_part_of_reshape(const Eigen::VectorXcd& vec,
                                           int n) {
  Eigen::MatrixXcd m(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) m(p, q) = vec[p * n + q];
  return 0.5 * (m + m.adjoint().eval());
}

}  // namespace

std::string to_string(GroupingMethod m) {
  switch (m) {
    case GroupingMethod::kQubitwise: return "QWC";
    case GroupingMethod::kGeneralCommuting: return "GC";
    default: return "BASIS_ROTATION";
  }
}

Grouping group_qubitwise(const PauliSum& sum) {
  return greedy_color(sum, GroupingMethod::kQubitwise, &qubitwise_compatible);
}

Grouping group_general_commuting(const PauliSum& sum) {
  return greedy_color(sum, GroupingMethod::kGeneralCommuting, &commutes);
}

Grouping group_basis_rotation(const CoefficientTensors& tensors) {
  if (tensors.hermiticity_defect() > 1e-8)
    throw std::invalid_argument("group_basis_rotation: non-hermitian input");
  const int n = tensors.n_spin_orbitals();

  Grouping grouping;
  grouping.method = GroupingMethod::kBasisRotation;
  grouping.width = n;

  // One-body group: diagonalize h_pq, measure number operators.
  {
    CoefficientTensors one(n);
    one.one_body() = tensors.one_body();
    MeasurementGroup g;
    g.observable = jordan_wigner(one).real_part();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(tensors.one_body());
    g.rotation_basis = es.eigenvectors();
    g.prescription = "one-body: rotate to eigenbasis, measure occupations";
    grouping.groups.push_back(std::move(g));
  }

  // Double factorization of the (pq),(rs) reshape.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n * n, n * n);
  for (const auto& [k, v] : tensors.two_body())
    m(k[0] * n + k[1], k[2] * n + k[3]) = v;
  if (m.isZero(0.0)) return grouping;

  const bool hermitian_reshape =
      (m - m.adjoint()).cwiseAbs().maxCoeff() < kFactorTruncation;
  if (hermitian_reshape) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    for (int t = 0; t < es.eigenvalues().size(); ++t) {
      const double lambda = es.eigenvalues()[t];
      if (std::abs(lambda) < kFactorTruncation) continue;
      const Eigen::VectorXcd v = es.eigenvectors().col(t);
      MeasurementGroup g;
      g.observable =
          jordan_wigner(factor_tensors(n, lambda, v, v)).real_part();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> basis(
          hermitian_part_of_reshape(v, n));
      g.rotation_basis = basis.eigenvectors();
      g.prescription =
          "two-body factor: rotate to factor eigenbasis, measure occupation "
          "products";
      grouping.groups.push_back(std::move(g));
    }
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
        m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    for (int t = 0; t < svd.singularValues().size(); ++t) {
      const double sigma = svd.singularValues()[t];
      if (sigma < kFactorTruncation) continue;
      const Eigen::VectorXcd left = svd.matrixU().col(t);
      const Eigen::VectorXcd right = svd.matrixV().col(t);
      MeasurementGroup g;
      g.observable =
          jordan_wigner(factor_tensors(n, sigma, left, right))
              .real_part();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> basis(
          hermitian_part_of_reshape(left, n));
      g.rotation_basis = basis.eigenvectors();
      g.prescription =
          "two-body factor: rotate to factor eigenbasis, measure occupation "
          "products";
      grouping.groups.push_back(std::move(g));
    }
  }
  return grouping;
}

PauliSum group_observable(const MeasurementGroup& group, const PauliSum& sum) {
  if (group.observable) {
    PauliSum obs = *group.observable;
    obs.set_identity_offset({0.0, 0.0});
    return obs;
  }
  const auto terms = ordered_terms(sum);
  PauliSum obs(sum.width());
  for (std::size_t idx : group.term_indices) {
    if (idx >= terms.size())
      throw std::out_of_range("group term index out of range");
    obs.add_term(terms[idx].first, terms[idx].second);
  }
  return obs;
}

ShotEstimate estimate_shots(const Grouping& grouping, const PauliSum& sum,
                            const Eigen::VectorXcd& state, double epsilon) {
  if (std::abs(state.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("estimate_shots: state not normalized");
  if (grouping.width > kDenseWidthGuard)
    throw std::invalid_argument("estimate_shots: width over guard");
  if (state.size() != (Eigen::Index{1} << grouping.width))
    throw std::invalid_argument("estimate_shots: state dimension mismatch");

  ShotEstimate estimate;
  estimate.epsilon = epsilon;
  double sqrt_sum = 0.0;
  for (const auto& group : grouping.groups) {
    const PauliSum obs = group_observable(group, sum);
    const Eigen::VectorXcd phi = orfh::apply(obs, state);
    const double mean = std::real(state.dot(phi));
    double var = std::real(phi.dot(phi)) - mean * mean;
    if (var < -kVarianceGuard)
      throw std::runtime_error("estimate_shots: negative group variance");
    if (var < 0.0) var = 0.0;
    estimate.group_variances.push_back(var);
    sqrt_sum += std::sqrt(var);
  }
  estimate.k_factor = sqrt_sum * sqrt_sum;
  estimate.shots = estimate.k_factor / (epsilon * epsilon);
  return estimate;
}

}  // namespace orfh
