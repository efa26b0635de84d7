#include <cmath>

#include "doctest.h"
#include "orfh/analysis.hpp"
#include "orfh/hubbard.hpp"
#include "orfh/jordan_wigner.hpp"
#include "orfh/rotation.hpp"

using namespace orfh;

TEST_CASE("Hubbard N=4 norms") {
  const CoefficientTensors t = build_hubbard({.n_sites = 4});
  // 16 hopping entries of magnitude 1, 8 diagonal entries 1/2, 4 two-body
  // coefficients 2U/2 = 1: 1-norm 16 + 4 + 4 = 24; 2-norm sqrt(16 + 2 + 4).
  CHECK(induced_p_norm(t, 1) == doctest::Approx(24.0).epsilon(1e-12));
  CHECK(induced_p_norm(t, 2) ==
        doctest::Approx(std::sqrt(22.0)).epsilon(1e-12));
  CHECK_THROWS(induced_p_norm(t, 3));
}

TEST_CASE("report invariants on a rotated instance") {
  const CoefficientTensors fh = build_hubbard({.n_sites = 3});
  const CoefficientTensors rot = rotate(fh, sample_rotation(6, 5, false));
  const StructureReport r = analyze(rot, "ORFH");
  CHECK(r.n_spin_orbitals == 6);
  CHECK(r.source == "ORFH");
  CHECK(r.one_norm >= 0.0);
  CHECK(r.two_norm <= r.one_norm + 1e-12);
  CHECK(r.pauli_term_count == count_pauli_terms(jordan_wigner(rot)));
  // Densification: the rotated instance has strictly larger 1-norm here.
  CHECK(r.one_norm > induced_p_norm(fh, 1));
}

TEST_CASE("term count excludes the identity") {
  PauliSum sum(2);
  sum.set_identity_offset(Complex(3.0, 0.0));
  CHECK(count_pauli_terms(sum) == 0);
  PauliString x;
  x.x = 1;
  x.width = 2;
  sum.add_term(x, Complex(1.0, 0.0));
  CHECK(count_pauli_terms(sum) == 1);
}
