#pragma once

#include <vector>

namespace orfh {

struct BetheSolution {
  std::vector<double> charge_momenta;   // k_j, radians
  std::vector<double> spin_rapidities;  // lambda_alpha
  double energy = 0.0;                  // kinetic: -2t sum_j cos k_j
  bool converged = false;
  double residual = 0.0;
};

/// Ground-state solution of the finite-ring Lieb-Wu equations at half
/// filling (N_e = n_sites electrons, N_e/2 down spins, real roots), solved
/// by damped Newton with continuation in U. The returned energy is the
/// kinetic Bethe energy; chemical-potential shifts are the caller's
/// convention. Requires even n_sites and u > 0.
BetheSolution bethe_half_filled_energy(int n_sites, double t, double u);

/// Half-filled ground energy per site in the thermodynamic limit via
/// quadrature of the Lieb-Wu integral
///   e(u) = -4t int_0^inf J0(w) J1(w) / (w (1 + exp(w u / (2t)))) dw,
/// with t = 1. At u = 0 this is -4/pi.
double bethe_bulk_energy_density(double u);

}  // namespace orfh
