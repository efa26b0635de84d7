#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fock_oracle.hpp"
#include "orfh/bethe.hpp"
#include "orfh/exact.hpp"
#include "orfh/hubbard.hpp"
#include "orfh/jordan_wigner.hpp"
#include "orfh/rotation.hpp"
#include "orfh/scf.hpp"
#include "test_util.hpp"

using namespace orfh;
using orfh::testing::fock_ground_energy;
using orfh::testing::random_tensors;

TEST_CASE("dense ground state matches the Fock oracle") {
  for (std::uint64_t seed : {31u, 32u}) {
    const CoefficientTensors t = random_tensors(4, seed);
    const auto gs = exact_ground_state(jordan_wigner(t), 2);
    CHECK(gs.size() == 2);
    CHECK(gs[0].energy == doctest::Approx(fock_ground_energy(t)).epsilon(1e-11));
    CHECK(gs[0].energy <= gs[1].energy);
    CHECK(gs[0].residual < 1e-9);
    CHECK(gs[0].statevector.size() == 16);
  }
}

TEST_CASE("lanczos agrees with the dense path") {
  const CoefficientTensors fh = build_hubbard({.n_sites = 4});
  const CoefficientTensors rot = rotate(fh, sample_rotation(8, 9, false));
  const PauliSum h = jordan_wigner(rot);
  const auto dense = exact_ground_state(h, 1);
  const auto sparse = lanczos_lowest(h, 1);
  CHECK(sparse[0].energy == doctest::Approx(dense[0].energy).epsilon(1e-9));
  CHECK(sparse[0].residual < 1e-9);
}

TEST_CASE("width guards are explicit capability errors") {
  PauliSum wide(kSparseWidthGuard + 1);
  PauliString z;
  z.z = 1;
  z.width = kSparseWidthGuard + 1;
  wide.add_term(z, 1.0);
  CHECK_THROWS(exact_ground_state(wide, 1));
}

TEST_CASE("bulk Lieb-Wu integral limits") {
  CHECK(bethe_bulk_energy_density(0.0) ==
        doctest::Approx(-4.0 / std::numbers::pi).epsilon(1e-10));
  // Monotone in u, and small at strong coupling.
  CHECK(bethe_bulk_energy_density(1.0) > bethe_bulk_energy_density(0.5));
  CHECK(std::abs(bethe_bulk_energy_density(16.0)) < 0.4);
}

TEST_CASE("finite-ring Bethe energy matches half-filled ED") {
  // ED at mu = U/2 restricted to nothing (grand canonical) sits in the
  // half-filled sector; the Bethe kinetic energy needs the -mu N shift.
  for (int n_sites : {2, 4}) {
    for (double u : {1.0, 4.0}) {
      HubbardParams params;
      params.n_sites = n_sites;
      params.u = u;
      params.mu = u / 2;
      // The finite-ring equations already cover the N=2 doubled bond
      // through the k in {0, pi} dispersion, so t stays at 1.
      const BetheSolution sol = bethe_half_filled_energy(n_sites, 1.0, u);
      CHECK(sol.converged);
      const double e_bethe = sol.energy - params.mu * n_sites;
      const auto gs = exact_ground_state(jordan_wigner(build_hubbard(params)), 1);
      CHECK(e_bethe == doctest::Approx(gs[0].energy).epsilon(1e-8));
    }
  }
}

TEST_CASE("ghf is variational and converges on small instances") {
  const CoefficientTensors fh = build_hubbard({.n_sites = 3});
  const CoefficientTensors rot = rotate(fh, sample_rotation(6, 201, false));
  const ScfResult hf = run_ghf(rot, 3);
  CHECK(hf.converged);
  const double e_exact = exact_ground_state(jordan_wigner(rot), 1)[0].energy;
  CHECK(hf.hf_energy >= e_exact - 1e-10);
  CHECK(correlation_energy(e_exact, hf.hf_energy) <= 1e-10);
  // Orbitals orthonormal.
  const Eigen::MatrixXcd& c = hf.orbital_coefficients;
  CHECK((c.adjoint() * c - Eigen::MatrixXcd::Identity(c.cols(), c.cols()))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
}

TEST_CASE("correlation ratio grows with U at fixed size") {
  double last = -1.0;
  for (double u : {0.5, 2.0, 4.0}) {
    HubbardParams params;
    params.n_sites = 2;
    params.u = u;
    params.mu = u / 2;
    const CoefficientTensors t = build_hubbard(params);
    const double e_exact = exact_ground_state(jordan_wigner(t), 1)[0].energy;
    const ScfResult hf = run_ghf(t, 2);
    const double ratio = -correlation_energy(e_exact, hf.hf_energy) /
                         std::abs(e_exact);
    CHECK(ratio > last);
    last = ratio;
  }
}
