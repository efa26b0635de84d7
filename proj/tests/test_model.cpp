#include <algorithm>

#include "doctest.h"
#include "orfh/exact.hpp"
#include "orfh/hubbard.hpp"
#include "orfh/jordan_wigner.hpp"
#include "orfh/rotation.hpp"

using namespace orfh;

namespace {

Eigen::VectorXd sorted_spectrum(const CoefficientTensors& t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      pauli_matrix(jordan_wigner(t)));
  return es.eigenvalues();
}

PauliSum number_operator(int n) {
  // sum_p c+_p c_p = n/2 - 1/2 sum_p Z_p
  PauliSum sum(n);
  sum.set_identity_offset(Complex(n / 2.0, 0.0));
  for (int p = 0; p < n; ++p) {
    PauliString z;
    z.z = std::uint64_t{1} << p;
    z.width = n;
    sum.add_term(z, Complex(-0.5, 0.0));
  }
  return sum;
}

PauliSum sz_operator(int n) {
  // 1/2 sum_i (n_up,i - n_down,i): alternating -/+ Z/2 pattern
  PauliSum sum(n);
  for (int p = 0; p < n; ++p) {
    PauliString z;
    z.z = std::uint64_t{1} << p;
    z.width = n;
    sum.add_term(z, Complex(p % 2 == 0 ? -0.25 : 0.25, 0.0));
  }
  return sum;
}

}  // namespace

TEST_CASE("hubbard builder structure") {
  HubbardParams params;
  params.n_sites = 4;
  params.t = 1.0;
  params.u = 1.0;
  params.mu = 0.5;
  const CoefficientTensors t = build_hubbard(params);
  CHECK(t.n_spin_orbitals() == 8);
  // Hopping -t on nearest-neighbor same-spin pairs, -mu on the diagonal.
  CHECK(t.one_body()(0, 2) == Complex(-1.0, 0.0));
  CHECK(t.one_body()(2, 0) == Complex(-1.0, 0.0));
  CHECK(t.one_body()(1, 3) == Complex(-1.0, 0.0));
  CHECK(t.one_body()(0, 0) == Complex(-0.5, 0.0));
  CHECK(t.one_body()(0, 3) == Complex(0.0, 0.0));
  // On-site repulsion: 1/2 * 2U c+_{2i} c_{2i} c+_{2i+1} c_{2i+1} = U n n.
  CHECK(t.two_body_at(0, 0, 1, 1) == Complex(2.0, 0.0));
  CHECK(t.two_body().size() == 4);
  CHECK(t.hermiticity_defect() == 0.0);
  CHECK_THROWS(build_hubbard({.n_sites = 1}));
}

TEST_CASE("n_sites = 2 periodic sum doubles the hopping amplitude") {
  const CoefficientTensors t = build_hubbard({.n_sites = 2});
  CHECK(t.one_body()(0, 2) == Complex(-2.0, 0.0));
}

TEST_CASE("rotation sampling is deterministic and unitary") {
  const OrbitalRotation a = sample_rotation(8, 123, false);
  const OrbitalRotation b = sample_rotation(8, 123, false);
  CHECK((a.matrix - b.matrix).cwiseAbs().maxCoeff() == 0.0);
  CHECK(a.unitarity_defect() < 1e-12);
  CHECK((sample_rotation(8, 124, false).matrix - a.matrix)
            .cwiseAbs()
            .maxCoeff() > 1e-3);
  CHECK_THROWS(sample_rotation(7, 1, false));
  CHECK_THROWS(sample_rotation(2, 1, false));
}

TEST_CASE("real rotations are orthogonal with unit determinant magnitude") {
  const OrbitalRotation o = sample_rotation(8, 55, true);
  CHECK(o.matrix.imag().cwiseAbs().maxCoeff() == 0.0);
  CHECK(o.unitarity_defect() < 1e-12);
  CHECK(std::abs(std::abs(o.matrix.real().determinant()) - 1.0) < 1e-12);
}

TEST_CASE("identity rotation reproduces the input tensors entrywise") {
  const CoefficientTensors fh = build_hubbard({.n_sites = 3});
  OrbitalRotation id;
  id.dimension = 6;
  id.matrix = Eigen::MatrixXcd::Identity(6, 6);
  const CoefficientTensors out = rotate(fh, id);
  CHECK((out.one_body() - fh.one_body()).cwiseAbs().maxCoeff() < 1e-14);
  for (const auto& [key, v] : fh.two_body())
    CHECK(std::abs(out.two_body_at(key[0], key[1], key[2], key[3]) - v) <
          1e-14);
  CHECK(out.two_body().size() == fh.two_body().size());
}

TEST_CASE("rotation preserves the spectrum") {
  const CoefficientTensors fh = build_hubbard({.n_sites = 3});
  const OrbitalRotation u = sample_rotation(6, 901, false);
  const CoefficientTensors rot = rotate(fh, u);
  const Eigen::VectorXd sa = sorted_spectrum(fh);
  const Eigen::VectorXd sb = sorted_spectrum(rot);
  CHECK((sa - sb).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("rotated model conserves particle number but breaks Sz") {
  const CoefficientTensors fh = build_hubbard({.n_sites = 2});
  const CoefficientTensors rot = rotate(fh, sample_rotation(4, 77, false));
  const Eigen::MatrixXcd h = pauli_matrix(jordan_wigner(rot));
  const Eigen::MatrixXcd nmat = pauli_matrix(number_operator(4));
  const Eigen::MatrixXcd sz = pauli_matrix(sz_operator(4));
  CHECK((h * nmat - nmat * h).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((h * sz - sz * h).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("real-flag rotations yield real tensors") {
  const CoefficientTensors fh = build_hubbard({.n_sites = 3});
  const CoefficientTensors rot = rotate(fh, sample_rotation(6, 13, true));
  CHECK(rot.is_real());
}

TEST_CASE("half filling at mu = U/2") {
  // Odd rings are frustrated: the grand-canonical minimum sits off half
  // filling unless U is large, so odd sizes are checked at strong coupling.
  for (int n_sites : {2, 3, 4, 5}) {
    HubbardParams params;
    params.n_sites = n_sites;
    params.u = n_sites % 2 == 0 ? 1.7 : 4.0;
    params.mu = params.u / 2;
    const PauliSum h = jordan_wigner(build_hubbard(params));
    const auto gs = exact_ground_state(h, 1);
    const double filling =
        expectation(number_operator(2 * n_sites), gs[0].statevector);
    CHECK(filling == doctest::Approx(n_sites).epsilon(1e-8));
  }
}
