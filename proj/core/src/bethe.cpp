#include "orfh/bethe.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace orfh {

namespace {

constexpr double kResidualTol = 1e-12;
constexpr double kPi = std::numbers::pi;

struct LiebWuSystem {
  int sites;             // ring length L
  int n_electrons;       // N_e
  int n_down;            // M
  double u;              // U / (4t)
  std::vector<double> charge_numbers;  // I_j
  std::vector<double> spin_numbers;    // J_alpha

  int dim() const { return n_electrons + n_down; }

  // Residual F(x); x = (k_1..k_Ne, lambda_1..lambda_M).
  Eigen::VectorXd residual(const Eigen::VectorXd& x) const {
    Eigen::VectorXd f(dim());
    for (int j = 0; j < n_electrons; ++j) {
      double acc = sites * x[j] - 2.0 * kPi * charge_numbers[j];
      for (int a = 0; a < n_down; ++a)
        acc += 2.0 * std::atan((std::sin(x[j]) - x[n_electrons + a]) / u);
      f[j] = acc;
    }
    for (int a = 0; a < n_down; ++a) {
      const double la = x[n_electrons + a];
      double acc = -2.0 * kPi * spin_numbers[a];
      for (int j = 0; j < n_electrons; ++j)
        acc += 2.0 * std::atan((la - std::sin(x[j])) / u);
      for (int b = 0; b < n_down; ++b) {
        if (b == a) continue;
        acc -= 2.0 * std::atan((la - x[n_electrons + b]) / (2.0 * u));
      }
      f[n_electrons + a] = acc;
    }
    return f;
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(dim(), dim());
    for (int j = 0; j < n_electrons; ++j) {
      const double sk = std::sin(x[j]);
      const double ck = std::cos(x[j]);
      double diag = sites;
      for (int a = 0; a < n_down; ++a) {
        const double la = x[n_electrons + a];
        const double denom = u * u + (sk - la) * (sk - la);
        diag += 2.0 * u * ck / denom;
        jac(j, n_electrons + a) = -2.0 * u / denom;
      }
      jac(j, j) = diag;
    }
    for (int a = 0; a < n_down; ++a) {
      const double la = x[n_electrons + a];
      double diag = 0.0;
      for (int j = 0; j < n_electrons; ++j) {
        const double sk = std::sin(x[j]);
        const double ck = std::cos(x[j]);
        const double denom = u * u + (la - sk) * (la - sk);
        diag += 2.0 * u / denom;
        jac(n_electrons + a, j) = -2.0 * u * ck / denom;
      }
      for (int b = 0; b < n_down; ++b) {
        if (b == a) continue;
        const double lb = x[n_electrons + b];
        const double denom = 4.0 * u * u + (la - lb) * (la - lb);
        diag -= 4.0 * u / denom;
        jac(n_electrons + a, n_electrons + b) = 4.0 * u / denom;
      }
      jac(n_electrons + a, n_electrons + a) = diag;
    }
    return jac;
  }
};

// Damped Newton: full step when it reduces the residual, otherwise
// backtracking halving.
bool damped_newton(const LiebWuSystem& sys, Eigen::VectorXd& x,
                   int max_iter = 200) {
  double fnorm = sys.residual(x).norm();
  for (int iter = 0; iter < max_iter; ++iter) {
    if (fnorm < kResidualTol) return true;
    const Eigen::VectorXd f = sys.residual(x);
    const Eigen::VectorXd step = sys.jacobian(x).partialPivLu().solve(f);
    double damping = 1.0;
    for (int bt = 0; bt < 40; ++bt) {
      const Eigen::VectorXd trial = x - damping * step;
      const double trial_norm = sys.residual(trial).norm();
      if (trial_norm < fnorm) {
        x = trial;
        fnorm = trial_norm;
        break;
      }
      damping *= 0.5;
      if (bt == 39) return false;
    }
  }
  return sys.residual(x).norm() < kResidualTol;
}

// Consecutive quantum-number sequences on the parity grid, shifted by
// `offset` grid units from the most symmetric placement.
std::vector<double> consecutive_numbers(int count, bool half_odd, int offset) {
  std::vector<double> out(count);
  const double base = half_odd ? -(count / 2.0) + 0.5 : -((count - 1) / 2);
  for (int i = 0; i < count; ++i) out[i] = base + i + offset;
  return out;
}

}  // namespace

BetheSolution bethe_half_filled_energy(int n_sites, double t, double u) {
  if (n_sites < 2 || n_sites % 2 != 0)
    throw std::invalid_argument(
        "bethe_half_filled_energy requires even n_sites >= 2");
  if (u <= 0.0)
    throw std::invalid_argument("bethe_half_filled_energy requires u > 0");

  const int n_e = n_sites;
  const int m = n_sites / 2;
  // Lieb-Wu parities: I_j half-odd iff M odd; J_a half-odd iff N_e - M even.
  const bool charge_half_odd = (m % 2 != 0);
  const bool spin_half_odd = ((n_e - m) % 2 == 0);

  BetheSolution best;
  double best_energy = 0.0;
  // Ground-state sequences are consecutive and (nearly) symmetric; when an
  // even count on an integer grid cannot be centered, the two mirror
  // placements are tried and the lower converged energy wins.
  for (int charge_offset : {0, -1}) {
    for (int spin_offset : {0, -1}) {
      LiebWuSystem sys;
      sys.sites = n_sites;
      sys.n_electrons = n_e;
      sys.n_down = m;
      sys.charge_numbers =
          consecutive_numbers(n_e, charge_half_odd, charge_offset);
      sys.spin_numbers = consecutive_numbers(m, spin_half_odd, spin_offset);

      // Continuation in the coupling from a moderately interacting start.
      const double u_target = u / (4.0 * t);
      const double u_start = 1.0;
      Eigen::VectorXd x(sys.dim());
      sys.u = u_start;
      for (int j = 0; j < n_e; ++j)
        x[j] = 2.0 * kPi * sys.charge_numbers[j] / n_sites;
      for (int a = 0; a < m; ++a) x[n_e + a] = sys.spin_numbers[a];
      bool ok = damped_newton(sys, x);

      const int steps = 64;
      for (int s = 1; s <= steps && ok; ++s) {
        const double frac = static_cast<double>(s) / steps;
        sys.u = u_start * std::pow(u_target / u_start, frac);
        ok = damped_newton(sys, x);
      }
      if (!ok) continue;
      sys.u = u_target;

      double energy = 0.0;
      for (int j = 0; j < n_e; ++j) energy += -2.0 * t * std::cos(x[j]);
      if (!best.converged || energy < best_energy) {
        best.converged = true;
        best_energy = energy;
        best.energy = energy;
        best.residual = sys.residual(x).norm();
        best.charge_momenta.assign(x.data(), x.data() + n_e);
        best.spin_rapidities.assign(x.data() + n_e, x.data() + n_e + m);
      }
    }
  }
  if (!best.converged) {
    best.residual = std::numeric_limits<double>::infinity();
  }
  return best;
}

double bethe_bulk_energy_density(double u) {
  if (u < 0.0)
    throw std::invalid_argument("bethe_bulk_energy_density requires u >= 0");
  if (u < 1e-14) return -4.0 / kPi;

  // Composite 16-point Gauss-Legendre; the integrand decays like
  // exp(-w u / 2), so the cutoff is set from u.
  static const double nodes[8] = {
      0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
      0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
      0.9445750230732326, 0.9894009349916499};
  static const double weights[8] = {
      0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
      0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
      0.0622535239386479, 0.0271524594117541};

  auto integrate = [&](int panels_per_unit) {
    const double w_max = std::max(60.0, 90.0 / u);
    const int panels = static_cast<int>(w_max * panels_per_unit) + 1;
    const double h = w_max / panels;
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
      const double mid = (p + 0.5) * h;
      for (int g = 0; g < 8; ++g) {
        for (double sign : {-1.0, 1.0}) {
          const double w = mid + sign * 0.5 * h * nodes[g];
          const double f = std::cyl_bessel_j(0, w) * std::cyl_bessel_j(1, w) /
                           (w * (1.0 + std::exp(w * u / 2.0)));
          acc += 0.5 * h * weights[g] * f;
        }
      }
    }
    return -4.0 * acc;
  };

  const double coarse = integrate(2);
  const double fine = integrate(3);
  if (std::abs(coarse - fine) > 1e-10)
    throw std::runtime_error("bethe_bulk_energy_density: quadrature did not "
                             "converge to 1e-10");
  return fine;
}

}  // namespace orfh
