#pragma once

#include <string>

#include "orfh/fermion.hpp"

namespace orfh {

/// Molecular integrals parsed from FCIDUMP text (namelist header with
/// NORB/NELEC, then "value i j k l" lines in the chemists' convention,
/// 1-based spatial indices, 8-fold permutation symmetry implied; the
/// i=j=k=l=0 line is the core energy).
struct FcidumpData {
  int n_orbitals = 0;
  int n_electrons = 0;
  CoefficientTensors tensors;  // kPqRs, spin-orbitals interleaved
};

/// Parse FCIDUMP text. Spatial integrals are expanded onto interleaved
/// spin-orbitals (even = alpha, odd = beta); the chemists' two-electron part
/// is rewritten into the c+ c c+ c storage convention, which moves a
/// -1/2 sum_q (pq|qs) contraction into the one-body tensor. Throws
/// std::runtime_error with a line number on malformed input.
FcidumpData parse_fcidump(const std::string& text);

FcidumpData read_fcidump(const std::string& path);

/// FCIDUMP-style text for arbitrary (possibly complex, spin-dependent)
/// tensors: a namelist header, then "re im p q r s" lines with 1-based
/// spin-orbital indices in the storage convention, no symmetry folding.
/// One-body entries use r = s = 0; the constant uses all-zero indices.
std::string write_fcidump_style(const CoefficientTensors& tensors);

}  // namespace orfh
