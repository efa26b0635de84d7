#include <random>
#include <set>

#include "doctest.h"
#include "orfh/exact.hpp"
#include "orfh/grouping.hpp"
#include "orfh/hubbard.hpp"
#include "orfh/jordan_wigner.hpp"
#include "orfh/rotation.hpp"
#include "test_util.hpp"

using namespace orfh;
using orfh::testing::random_tensors;

namespace {

std::vector<const PauliString*> term_list(const PauliSum& sum) {
  std::vector<const PauliString*> out;
  for (const auto& [s, c] : sum.terms()) out.push_back(&s);
  return out;
}

void check_partition(const Grouping& g, const PauliSum& sum) {
  std::set<std::size_t> seen;
  for (const auto& group : g.groups)
    for (std::size_t i : group.term_indices) CHECK(seen.insert(i).second);
  CHECK(seen.size() == sum.term_count());
}

Eigen::VectorXcd random_state(int width, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist;
  Eigen::VectorXcd v(1 << width);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = Complex(dist(gen), dist(gen));
  v.normalize();
  return v;
}

}  // namespace

TEST_CASE("qwc and gc groupings partition terms into compatible sets") {
  const CoefficientTensors fh = build_hubbard({.n_sites = 2});
  const CoefficientTensors rot = rotate(fh, sample_rotation(4, 3, false));
  const PauliSum h = jordan_wigner(rot);
  const auto terms = term_list(h);

  const Grouping qwc = group_qubitwise(h);
  check_partition(qwc, h);
  for (const auto& g : qwc.groups)
    for (std::size_t a : g.term_indices)
      for (std::size_t b : g.term_indices)
        CHECK(qubitwise_compatible(*terms[a], *terms[b]));

  const Grouping gc = group_general_commuting(h);
  check_partition(gc, h);
  for (const auto& g : gc.groups)
    for (std::size_t a : g.term_indices)
      for (std::size_t b : g.term_indices)
        CHECK(commutes(*terms[a], *terms[b]));

  // GC merges at least as aggressively as QWC.
  CHECK(gc.groups.size() <= qwc.groups.size());
}

TEST_CASE("basis-rotation groups reassemble the Hamiltonian") {
  const CoefficientTensors fh = build_hubbard({.n_sites = 2});
  for (std::uint64_t seed : {0u, 19u}) {
    const CoefficientTensors t =
        seed == 0 ? fh : rotate(fh, sample_rotation(4, seed, false));
    const Grouping br = group_basis_rotation(t);
    // O(N) retained two-body factors plus the one-body group.
    CHECK(br.groups.size() <= static_cast<std::size_t>(2 + 1));
    PauliSum total(4);
    for (const auto& g : br.groups) {
      REQUIRE(g.observable.has_value());
      total.add(*g.observable);
    }
    PauliSum ref = jordan_wigner(t);
    ref.scale(-1.0);
    total.add(ref);
    total.prune(1e-10);
    CHECK(total.term_count() == 0);
  }
}

TEST_CASE("shot estimate matches a brute-force variance computation") {
  for (std::uint64_t seed : {2u, 4u}) {
    const CoefficientTensors t = random_tensors(4, seed, 6);
    const PauliSum h = jordan_wigner(t);
    const Eigen::VectorXcd psi = random_state(4, seed + 100);
    const double eps = 1e-3;

    for (const Grouping& g : {group_qubitwise(h), group_general_commuting(h)}) {
      const ShotEstimate est = estimate_shots(g, h, psi, eps);
      double k_ref = 0.0;
      for (const auto& group : g.groups) {
        const PauliSum obs = group_observable(group, h);
        const Eigen::VectorXcd phi = orfh::apply(obs, psi);
        const double mean = std::real(psi.dot(phi));
        const double var = std::real(phi.dot(phi)) - mean * mean;
        k_ref += std::sqrt(std::max(0.0, var));
      }
      k_ref *= k_ref;
      CHECK(est.k_factor == doctest::Approx(k_ref).epsilon(1e-9));
      CHECK(est.shots == doctest::Approx(k_ref / (eps * eps)).epsilon(1e-9));
      CHECK(est.group_variances.size() == g.groups.size());
    }
  }
}

TEST_CASE("better groupings never need more shots on the ground state") {
  const CoefficientTensors fh = build_hubbard({.n_sites = 2});
  const CoefficientTensors t = rotate(fh, sample_rotation(4, 8, false));
  const PauliSum h = jordan_wigner(t);
  const Eigen::VectorXcd gs = exact_ground_state(h, 1)[0].statevector;
  const double eps = 1e-3;
  const double m_qwc = estimate_shots(group_qubitwise(h), h, gs, eps).shots;
  const double m_gc =
      estimate_shots(group_general_commuting(h), h, gs, eps).shots;
  const double m_br =
      estimate_shots(group_basis_rotation(t), h, gs, eps).shots;
  CHECK(m_gc <= m_qwc + 1e-9);
  CHECK(m_br <= m_gc + 1e-9);
}
