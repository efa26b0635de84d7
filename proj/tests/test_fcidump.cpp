#include <algorithm>

#include "doctest.h"
#include "fock_oracle.hpp"
#include "orfh/exact.hpp"
#include "orfh/fcidump.hpp"
#include "orfh/hubbard.hpp"
#include "orfh/jordan_wigner.hpp"

using namespace orfh;

TEST_CASE("core-energy-only file") {
  const FcidumpData d = parse_fcidump(
      "&FCI NORB=2,NELEC=2,MS2=0,\n&END\n"
      "  -1.5  0 0 0 0\n");
  CHECK(d.n_orbitals == 2);
  CHECK(d.n_electrons == 2);
  CHECK(d.tensors.n_spin_orbitals() == 4);
  CHECK(d.tensors.constant() == Complex(-1.5, 0.0));
  CHECK(d.tensors.one_body().cwiseAbs().maxCoeff() == 0.0);
  CHECK(d.tensors.two_body().empty());
}

TEST_CASE("one-electron integrals are spin-blocked onto interleaved orbitals") {
  const FcidumpData d = parse_fcidump(
      "&FCI NORB=2,NELEC=2,\n&END\n"
      "  0.25  1 2 0 0\n"
      "  -0.75 1 1 0 0\n");
  CHECK(d.tensors.two_body().empty());
  // even = alpha, odd = beta; the (1,2) entry is symmetrized.
  CHECK(d.tensors.one_body()(0, 2) == Complex(0.25, 0.0));
  CHECK(d.tensors.one_body()(2, 0) == Complex(0.25, 0.0));
  CHECK(d.tensors.one_body()(1, 3) == Complex(0.25, 0.0));
  CHECK(d.tensors.one_body()(0, 0) == Complex(-0.75, 0.0));
  CHECK(d.tensors.one_body()(1, 1) == Complex(-0.75, 0.0));
  CHECK(d.tensors.one_body()(0, 1) == Complex(0.0, 0.0));
}

TEST_CASE("a crafted file reproduces the two-site Hubbard spectrum") {
  // Spatial (ii|ii) = U plus hopping/chemical-potential one-body terms is
  // operator-identical to the Hubbard ring after spin expansion, even
  // though the stored two-body entries differ.
  const HubbardParams params{.n_sites = 2, .t = 1.0, .u = 1.3, .mu = 0.65};
  const FcidumpData d = parse_fcidump(
      "&FCI NORB=2,NELEC=2,MS2=0,\n&END\n"
      "  1.3  1 1 1 1\n"
      "  1.3  2 2 2 2\n"
      "  -2.0 1 2 0 0\n"
      "  -0.65 1 1 0 0\n"
      "  -0.65 2 2 0 0\n");
  const Eigen::MatrixXcd a = testing::fock_matrix(d.tensors);
  const Eigen::MatrixXcd b = testing::fock_matrix(build_hubbard(params));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ea(a), eb(b);
  CHECK((ea.eigenvalues() - eb.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
  // And the JW path agrees with the oracle on ingested tensors.
  CHECK((pauli_matrix(jordan_wigner(d.tensors)) - a).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_fcidump("NORB=2\n"),
                       doctest::Contains("line 1"), std::runtime_error);
  CHECK_THROWS_AS(parse_fcidump("&FCI NORB=2,\n&END\n  1.0 1 5 0 0\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_fcidump("&FCI NELEC=2,\n&END\n"), std::runtime_error);
}

TEST_CASE("fcidump-style export lists every stored coefficient") {
  const CoefficientTensors t = build_hubbard({.n_sites = 2});
  const std::string text = write_fcidump_style(t);
  CHECK(text.find("NORB=4") != std::string::npos);
  // 2 header lines, 2 two-body entries, 8 one-body entries, 1 constant.
  CHECK(std::count(text.begin(), text.end(), '\n') == 2 + 2 + 8 + 1);
}
