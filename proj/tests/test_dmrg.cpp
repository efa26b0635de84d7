#include "doctest.h"
#include "orfh/dmrg.hpp"
#include "orfh/exact.hpp"
#include "orfh/hubbard.hpp"
#include "orfh/jordan_wigner.hpp"
#include "orfh/mpo.hpp"
#include "orfh/rotation.hpp"
#include "test_util.hpp"

using namespace orfh;
using orfh::testing::random_tensors;

TEST_CASE("compiled mpo reproduces the dense operator") {
  const CoefficientTensors fh = build_hubbard({.n_sites = 3});
  for (const CoefficientTensors& t :
       {fh, rotate(fh, sample_rotation(6, 23, false))}) {
    const PauliSum h = jordan_wigner(t);
    const Mpo mpo = compile_mpo(h);
    CHECK(mpo.length() == 6);
    CHECK((mpo_matrix(mpo) - pauli_matrix(h)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("mpo compression keeps the bond dimension small on Hubbard") {
  const PauliSum h = jordan_wigner(build_hubbard({.n_sites = 4}));
  const Mpo mpo = compile_mpo(h);
  // The 1D Hubbard MPO is known to need only O(1) bond dimension plus the
  // ring's boundary hopping contribution.
  CHECK(mpo.max_bond_dim() <= 20);
  CHECK((mpo_matrix(mpo) - pauli_matrix(h)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("dmrg reaches the exact ground energy at small size") {
  const CoefficientTensors fh = build_hubbard({.n_sites = 3});
  for (const CoefficientTensors& t :
       {fh, rotate(fh, sample_rotation(6, 31, false))}) {
    const PauliSum h = jordan_wigner(t);
    const double e0 = exact_ground_state(h, 1)[0].energy;
    DmrgOptions opts;
    opts.max_bond = 16;
    opts.sweeps = 12;
    const DmrgResult res = dmrg_run(compile_mpo(h), opts);
    CHECK(res.converged);
    CHECK(res.energy == doctest::Approx(e0).epsilon(1e-8));
    CHECK(res.energy >= e0 - 1e-9);  // variational
    CHECK(res.truncation_error >= 0.0);
    // The converged MPS really is the ground state.
    const Eigen::VectorXcd psi = res.state.to_statevector();
    CHECK(std::abs(expectation(h, psi) - e0) < 1e-7);
  }
}

TEST_CASE("bond-dimension starvation degrades gracefully") {
  const CoefficientTensors fh = build_hubbard({.n_sites = 4, .u = 4.0, .mu = 2.0});
  const CoefficientTensors t = rotate(fh, sample_rotation(8, 47, false));
  const PauliSum h = jordan_wigner(t);
  const double e0 = exact_ground_state(h, 1)[0].energy;
  DmrgOptions opts;
  opts.seed = 3;
  const std::vector<double> errors =
      dmrg_error_scan(compile_mpo(h), {2, 16}, e0, opts);
  CHECK(errors[0] >= errors[1] - 1e-10);
  CHECK(errors[1] < 1e-6);
  CHECK(errors[0] >= -1e-12);
}

TEST_CASE("mps statevector is normalized") {
  const PauliSum h = jordan_wigner(random_tensors(4, 77));
  DmrgOptions opts;
  opts.max_bond = 8;
  opts.sweeps = 6;
  const DmrgResult res = dmrg_run(compile_mpo(h), opts);
  CHECK(res.state.to_statevector().norm() ==
        doctest::Approx(1.0).epsilon(1e-8));
}
