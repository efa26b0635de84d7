#include "orfh/scf.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace orfh {

namespace {

// Wick contraction of <c+_p c_q c+_r c_s> on a single determinant with
// density rho(a,b) = <c+_b c_a>:
//   rho(q,p) rho(s,r) + rho(s,p) (delta_qr - rho(q,r))
double hf_energy_of_density(const CoefficientTensors& t,
                            const Eigen::MatrixXcd& rho) {
  Complex e = t.constant();
  e += (t.one_body().array() * rho.transpose().array()).sum();
  for (const auto& [k, v] : t.two_body()) {
    const auto [p, q, r, s] = k;
    Complex pair = rho(q, p) * rho(s, r) - rho(s, p) * rho(q, r);
    if (q == r) pair += rho(s, p);
    e += 0.5 * v * pair;
  }
  return e.real();
}

Eigen::MatrixXcd fock_matrix(const CoefficientTensors& t,
                             const Eigen::MatrixXcd& rho) {
  Eigen::MatrixXcd f = t.one_body();
  for (const auto& [k, v] : t.two_body()) {
    const auto [p, q, r, s] = k;
    f(p, q) += 0.5 * v * rho(s, r);
    f(r, s) += 0.5 * v * rho(q, p);
    if (q == r) f(p, s) += 0.5 * v;
    f(p, s) -= 0.5 * v * rho(q, r);
    f(r, q) -= 0.5 * v * rho(s, p);
  }
  return 0.5 * (f + f.adjoint().eval());  // symmetrize roundoff
}

Eigen::MatrixXcd aufbau_density(const Eigen::MatrixXcd& f, int n_electrons,
                                Eigen::MatrixXcd* orbitals = nullptr) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(f);
  const Eigen::MatrixXcd occ =
      solver.eigenvectors().leftCols(n_electrons);
  if (orbitals) *orbitals = solver.eigenvectors();
  return occ * occ.adjoint();
}

}  // namespace

ScfResult run_ghf(const CoefficientTensors& tensors, int n_electrons,
                  int attempts, const ScfOptions& options) {
  const int n = tensors.n_spin_orbitals();
  if (n_electrons <= 0 || n_electrons > n)
    throw std::invalid_argument("run_ghf: electron count out of range");
  if (tensors.convention() != TwoBodyConvention::kPqRs)
    throw std::invalid_argument("run_ghf expects kPqRs tensors");

  ScfResult best;
  bool have_best = false;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Eigen::MatrixXcd guess = tensors.one_body();
    if (attempt > 0) {
      // Seeded hermitian perturbation of the core guess.
      std::mt19937_64 gen(options.seed * 0x9e3779b97f4a7c15ull + attempt);
      Eigen::MatrixXcd noise(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const double re = static_cast<double>(gen() >> 11) * 0x1.0p-53 - 0.5;
          const double im = static_cast<double>(gen() >> 11) * 0x1.0p-53 - 0.5;
          noise(i, j) = Complex(re, im);
        }
      guess += 0.5 * (noise + noise.adjoint());
    }
    Eigen::MatrixXcd rho = aufbau_density(guess, n_electrons);

    bool converged = false;
    int iter = 0;
    Eigen::MatrixXcd orbitals;
    // DIIS on the orbital-gradient commutator [F, rho].
    constexpr int kDiisDepth = 8;
    std::vector<Eigen::MatrixXcd> fock_hist, err_hist;
    for (; iter < options.max_iterations; ++iter) {
      Eigen::MatrixXcd f = fock_matrix(tensors, rho);
      const Eigen::MatrixXcd err = f * rho - rho * f;
      if (err.cwiseAbs().maxCoeff() < options.density_tol) {
        converged = true;
        rho = aufbau_density(f, n_electrons, &orbitals);
        break;
      }
      fock_hist.push_back(f);
      err_hist.push_back(err);
      if (static_cast<int>(fock_hist.size()) > kDiisDepth) {
        fock_hist.erase(fock_hist.begin());
        err_hist.erase(err_hist.begin());
      }
      const int m = static_cast<int>(fock_hist.size());
      if (m > 1) {
        Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m + 1, m + 1);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            b(i, j) = (err_hist[i].adjoint() * err_hist[j]).trace().real();
        b.row(m).head(m).setConstant(-1.0);
        b.col(m).head(m).setConstant(-1.0);
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
        rhs[m] = -1.0;
        const Eigen::VectorXd c = b.fullPivLu().solve(rhs);
        f.setZero();
        for (int i = 0; i < m; ++i) f += c[i] * fock_hist[i];
      }
      rho = aufbau_density(f, n_electrons, &orbitals);
    }

    ScfResult result;
    result.hf_energy = hf_energy_of_density(tensors, rho);
    result.orbital_coefficients = orbitals;
    result.occupations = n_electrons;
    result.converged = converged;
    result.iterations = iter + (converged ? 1 : 0);
    const bool better = !have_best ||
                        (result.converged && !best.converged) ||
                        (result.converged == best.converged &&
                         result.hf_energy < best.hf_energy);
    if (better) {
      best = result;
      have_best = true;
    }
  }
  return best;
}

double correlation_energy(double e_exact, double e_hf) {
  return e_exact - e_hf;
}

}  // namespace orfh
