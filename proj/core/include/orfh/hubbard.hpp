#pragma once

#include "orfh/fermion.hpp"

namespace orfh {

/// Periodic 1D Hubbard ring. Defaults follow the half-filling convention
/// t = 1, U = 1, mu = U/2.
struct HubbardParams {
  int n_sites = 4;
  double t = 1.0;
  double u = 1.0;
  double mu = 0.5;
};

/// Coefficient tensors of the Hubbard ring on 2N interleaved spin-orbitals
/// (even = up, odd = down). Note that for n_sites = 2 the periodic sum
/// visits the single bond twice, so the effective hopping amplitude is 2t;
/// this is kept as-is so instances are reproducible from the parameters.
CoefficientTensors build_hubbard(const HubbardParams& params);

}  // namespace orfh
