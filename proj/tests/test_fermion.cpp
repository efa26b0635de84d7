#include "doctest.h"
#include "fock_oracle.hpp"
#include "orfh/fermion.hpp"
#include "test_util.hpp"

using namespace orfh;
using orfh::testing::fock_matrix;
using orfh::testing::random_tensors;

TEST_CASE("two-body accumulation merges and prunes") {
  CoefficientTensors t(4);
  t.add_two_body(0, 1, 2, 3, Complex(1.0, 0.0));
  t.add_two_body(0, 1, 2, 3, Complex(-1.0, 0.0));
  t.add_two_body(1, 0, 3, 2, Complex(0.5, 0.5));
  t.prune_two_body();
  CHECK(t.two_body().size() == 1);
  CHECK(t.two_body_at(1, 0, 3, 2) == Complex(0.5, 0.5));
  CHECK(t.two_body_at(0, 1, 2, 3) == Complex(0.0, 0.0));
}

TEST_CASE("hermiticity defect detects asymmetric tensors") {
  CoefficientTensors t = random_tensors(4, 3);
  CHECK(t.hermiticity_defect() < 1e-14);
  t.one_body()(0, 1) += Complex(0.0, 0.25);
  CHECK(t.hermiticity_defect() > 0.2);
}

TEST_CASE("json round-trip is exact") {
  const CoefficientTensors t = random_tensors(6, 17);
  const CoefficientTensors back = CoefficientTensors::from_json(t.to_json());
  CHECK(back.n_spin_orbitals() == t.n_spin_orbitals());
  CHECK(back.convention() == t.convention());
  CHECK(back.constant() == t.constant());
  CHECK((back.one_body() - t.one_body()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(back.two_body().size() == t.two_body().size());
  for (const auto& [key, v] : t.two_body())
    CHECK(back.two_body().at(key) == v);
}

TEST_CASE("normal ordering preserves the represented operator") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const CoefficientTensors t = random_tensors(4, seed);
    const CoefficientTensors no = normal_order(t);
    CHECK(no.convention() == TwoBodyConvention::kNormalOrdered);
    const Eigen::MatrixXcd a = fock_matrix(t);
    const Eigen::MatrixXcd b = fock_matrix(no);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
  }
}
