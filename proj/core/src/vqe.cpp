#include "orfh/vqe.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <random>
#include <stdexcept>

namespace orfh {

namespace {

constexpr double kPi = std::numbers::pi;

void apply_ry(Eigen::VectorXcd& v, int q, double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const std::size_t bit = std::size_t{1} << q;
  const std::size_t dim = v.size();
  for (std::size_t b = 0; b < dim; ++b) {
    if (b & bit) continue;
    const Complex v0 = v[b];
    const Complex v1 = v[b | bit];
    v[b] = c * v0 - s * v1;
    v[b | bit] = s * v0 + c * v1;
  }
}

void apply_rz(Eigen::VectorXcd& v, int q, double theta) {
  const Complex e0 = std::polar(1.0, -0.5 * theta);
  const Complex e1 = std::polar(1.0, 0.5 * theta);
  const std::size_t bit = std::size_t{1} << q;
  const std::size_t dim = v.size();
  for (std::size_t b = 0; b < dim; ++b) v[b] *= (b & bit) ? e1 : e0;
}

void apply_cz(Eigen::VectorXcd& v, int q1, int q2) {
  const std::size_t mask =
      (std::size_t{1} << q1) | (std::size_t{1} << q2);
  const std::size_t dim = v.size();
  for (std::size_t b = 0; b < dim; ++b)
    if ((b & mask) == mask) v[b] = -v[b];
}

double portable_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Energy evaluator with an optional dense-matrix fast path and an
/// evaluation counter.
class EnergyEvaluator {
 public:
  EnergyEvaluator(const PauliSum& sum, const AnsatzCircuit& circuit)
      : sum_(sum), circuit_(circuit) {
    if (circuit.n_qubits <= 10) dense_ = pauli_matrix(sum);
  }

  double operator()(const std::vector<double>& params) {
    ++count_;
    const Eigen::VectorXcd state = apply_ansatz(circuit_, params);
    if (dense_.size() > 0)
      return std::real(state.dot(dense_ * state));
    return expectation(sum_, state);
  }

  std::int64_t count() const { return count_; }

 private:
  const PauliSum& sum_;
  const AnsatzCircuit& circuit_;
  Eigen::MatrixXcd dense_;
  std::int64_t count_ = 0;
};

std::vector<double> shift_gradient(EnergyEvaluator& eval,
                                   std::vector<double> params) {
  std::vector<double> grad(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double original = params[i];
    params[i] = original + 0.5 * kPi;
    const double plus = eval(params);
    params[i] = original - 0.5 * kPi;
    const double minus = eval(params);
    params[i] = original;
    grad[i] = 0.5 * (plus - minus);
  }
  return grad;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// Strong-Wolfe line search (bracket + zoom with bisection).
double wolfe_line_search(EnergyEvaluator& eval,
                         const std::vector<double>& x,
                         const std::vector<double>& dir, double f0,
                         const std::vector<double>& g0,
                         double c1, double c2) {
  const double d0 = dot(g0, dir);
  if (d0 >= 0.0) return 0.0;  // not a descent direction
  auto point = [&](double alpha) {
    std::vector<double> p = x;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += alpha * dir[i];
    return p;
  };
  auto slope = [&](double alpha) {
    return dot(shift_gradient(eval, point(alpha)), dir);
  };

  double alpha_prev = 0.0, f_prev = f0;
  double alpha = 1.0;
  double lo = 0.0, hi = 0.0, f_lo = f0;
  bool bracketed = false;
  for (int it = 0; it < 12 && !bracketed; ++it) {
    const double f = eval(point(alpha));
    if (f > f0 + c1 * alpha * d0 || (it > 0 && f >= f_prev)) {
      lo = alpha_prev; f_lo = f_prev; hi = alpha;
      bracketed = true;
      break;
    }
    const double d = slope(alpha);
    if (std::abs(d) <= -c2 * d0) return alpha;
    if (d >= 0.0) {
      lo = alpha; f_lo = f; hi = alpha_prev;
      bracketed = true;
      break;
    }
    alpha_prev = alpha; f_prev = f;
    alpha *= 2.0;
  }
  if (!bracketed) return alpha_prev;
  for (int it = 0; it < 20; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f = eval(point(mid));
    if (f > f0 + c1 * mid * d0 || f >= f_lo) {
      hi = mid;
    } else {
      const double d = slope(mid);
      if (std::abs(d) <= -c2 * d0) return mid;
      if (d * (hi - lo) >= 0.0) hi = lo;
      lo = mid; f_lo = f;
    }
  }
  return lo;
}

}  // namespace

VqeOptimizer parse_optimizer(const std::string& name) {
  if (name == "adam" || name == "ADAM") return VqeOptimizer::kAdam;
  if (name == "lbfgs" || name == "LBFGS") return VqeOptimizer::kLbfgs;
  if (name == "nft" || name == "NFT") return VqeOptimizer::kNft;
  if (name == "spsa" || name == "SPSA") return VqeOptimizer::kSpsa;
  throw std::invalid_argument("unknown optimizer: " + name);
}

std::string to_string(VqeOptimizer o) {
  switch (o) {
    case VqeOptimizer::kAdam: return "adam";
    case VqeOptimizer::kLbfgs: return "lbfgs";
    case VqeOptimizer::kNft: return "nft";
    default: return "spsa";
  }
}

Eigen::VectorXcd apply_ansatz(const AnsatzCircuit& circuit,
                              const std::vector<double>& parameters) {
  if (circuit.n_qubits > kDenseWidthGuard)
    throw std::invalid_argument("apply_ansatz: too many qubits");
  if (static_cast<int>(parameters.size()) != circuit.parameter_count())
    throw std::invalid_argument("apply_ansatz: parameter count mismatch");
  const std::size_t dim = std::size_t{1} << circuit.n_qubits;
  Eigen::VectorXcd state = Eigen::VectorXcd::Zero(dim);
  state[0] = 1.0;
  std::size_t p = 0;
  for (int layer = 0; layer <= circuit.depth; ++layer) {
    for (int q = 0; q < circuit.n_qubits; ++q) {
      apply_ry(state, q, parameters[p++]);
      apply_rz(state, q, parameters[p++]);
    }
    if (layer < circuit.depth)
      for (int q = 0; q + 1 < circuit.n_qubits; ++q)
        apply_cz(state, q, q + 1);
  }
  return state;
}

double energy(const PauliSum& sum, const Eigen::VectorXcd& state) {
  if (state.size() != (Eigen::Index{1} << sum.width()))
    throw std::invalid_argument("energy: state width mismatch");
  return expectation(sum, state);
}

std::vector<double> gradient(const PauliSum& sum, const AnsatzCircuit& circuit,
                             const std::vector<double>& parameters) {
  EnergyEvaluator eval(sum, circuit);
  return shift_gradient(eval, parameters);
}

VqeTrajectory run_vqe(const PauliSum& sum, const AnsatzCircuit& circuit,
                      VqeOptimizer optimizer, std::uint64_t seed,
                      int max_iterations, const VqeOptions& options) {
  const int n_params = circuit.parameter_count();
  std::mt19937_64 gen(seed);
  std::vector<double> params(n_params);
  for (double& p : params)
    p = options.init_range * (2.0 * portable_uniform(gen) - 1.0);

  EnergyEvaluator eval(sum, circuit);
  VqeTrajectory traj;
  traj.optimizer = optimizer;
  traj.seed = seed;
  traj.energies.push_back(eval(params));
  traj.best_energy = traj.energies.front();
  auto record = [&](double e) {
    traj.energies.push_back(e);
    traj.best_energy = std::min(traj.best_energy, e);
  };

  switch (optimizer) {
    case VqeOptimizer::kAdam: {
      std::vector<double> m(n_params, 0.0), v(n_params, 0.0);
      for (int k = 1; k <= max_iterations; ++k) {
        const auto g = shift_gradient(eval, params);
        for (int i = 0; i < n_params; ++i) {
          m[i] = options.adam_beta1 * m[i] + (1.0 - options.adam_beta1) * g[i];
          v[i] = options.adam_beta2 * v[i] +
                 (1.0 - options.adam_beta2) * g[i] * g[i];
          const double mhat = m[i] / (1.0 - std::pow(options.adam_beta1, k));
          const double vhat = v[i] / (1.0 - std::pow(options.adam_beta2, k));
          params[i] -=
              options.adam_step * mhat / (std::sqrt(vhat) + options.adam_eps);
        }
        record(eval(params));
      }
      break;
    }
    case VqeOptimizer::kLbfgs: {
      std::deque<std::vector<double>> s_hist, y_hist;
      std::vector<double> g = shift_gradient(eval, params);
      double f = traj.energies.front();
      for (int k = 0; k < max_iterations; ++k) {
        // Two-loop recursion.
        std::vector<double> q = g;
        std::vector<double> alphas(s_hist.size());
        for (int i = static_cast<int>(s_hist.size()) - 1; i >= 0; --i) {
          const double rho = 1.0 / dot(y_hist[i], s_hist[i]);
          alphas[i] = rho * dot(s_hist[i], q);
          for (int j = 0; j < n_params; ++j) q[j] -= alphas[i] * y_hist[i][j];
        }
        if (!s_hist.empty()) {
          const double gamma = dot(s_hist.back(), y_hist.back()) /
                               dot(y_hist.back(), y_hist.back());
          for (double& qi : q) qi *= gamma;
        }
        for (int i = 0; i < static_cast<int>(s_hist.size()); ++i) {
          const double rho = 1.0 / dot(y_hist[i], s_hist[i]);
          const double beta = rho * dot(y_hist[i], q);
          for (int j = 0; j < n_params; ++j)
            q[j] += (alphas[i] - beta) * s_hist[i][j];
        }
        std::vector<double> dir(n_params);
        for (int j = 0; j < n_params; ++j) dir[j] = -q[j];

        const double alpha =
            wolfe_line_search(eval, params, dir, f, g, options.wolfe_c1,
                              options.wolfe_c2);
        if (alpha <= 0.0) {
          record(f);
          continue;
        }
        std::vector<double> params_new = params, g_new;
        for (int j = 0; j < n_params; ++j) params_new[j] += alpha * dir[j];
        g_new = shift_gradient(eval, params_new);
        const double f_new = eval(params_new);

        std::vector<double> s(n_params), y(n_params);
        for (int j = 0; j < n_params; ++j) {
          s[j] = params_new[j] - params[j];
          y[j] = g_new[j] - g[j];
        }
        if (dot(s, y) > 1e-12) {
          s_hist.push_back(std::move(s));
          y_hist.push_back(std::move(y));
          if (static_cast<int>(s_hist.size()) > options.lbfgs_memory) {
            s_hist.pop_front();
            y_hist.pop_front();
          }
        }
        params = std::move(params_new);
        g = std::move(g_new);
        f = f_new;
        record(f);
      }
      break;
    }
    case VqeOptimizer::kNft: {
      // Sequential exact sinusoidal minimization: each single-parameter
      // energy is a + r cos(theta - phi) (rotation generators with +-1
      // eigenvalues), reconstructed from three equidistant samples.
      for (int sweep = 0; sweep < max_iterations; ++sweep) {
        double last = 0.0;
        for (int i = 0; i < n_params; ++i) {
          const double theta0 = params[i];
          const double e0 = eval(params);
          params[i] = theta0 + 2.0 * kPi / 3.0;
          const double ep = eval(params);
          params[i] = theta0 - 2.0 * kPi / 3.0;
          const double em = eval(params);
          const double a = (e0 + ep + em) / 3.0;
          const double c = e0 - a;
          const double s = (em - ep) / std::sqrt(3.0);
          const double r = std::hypot(c, s);
          if (r < 1e-15) {
            params[i] = theta0;
            last = e0;
            continue;
          }
          const double phi = theta0 - std::atan2(s, c);
          params[i] = phi + kPi;
          last = a - r;
        }
        record(last);
      }
      break;
    }
    case VqeOptimizer::kSpsa: {
      const double big_a = max_iterations / 10.0;
      for (int k = 0; k < max_iterations; ++k) {
        const double ak =
            options.spsa_a / std::pow(k + 1.0 + big_a, 0.602);
        const double ck = options.spsa_c / std::pow(k + 1.0, 0.101);
        std::vector<double> delta(n_params);
        for (double& d : delta)
          d = (gen() & 1u) ? 1.0 : -1.0;
        std::vector<double> plus = params, minus = params;
        for (int i = 0; i < n_params; ++i) {
          plus[i] += ck * delta[i];
          minus[i] -= ck * delta[i];
        }
        const double fp = eval(plus);
        const double fm = eval(minus);
        for (int i = 0; i < n_params; ++i)
          params[i] -= ak * (fp - fm) / (2.0 * ck * delta[i]);
        record(eval(params));
      }
      break;
    }
  }
  traj.evaluations = eval.count();
  return traj;
}

}  // namespace orfh
