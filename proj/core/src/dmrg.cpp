#include "orfh/dmrg.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace orfh {

namespace {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Theta = std::array<MatrixXcd, 4>;  // [s1*2+s2], chi_l x chi_r

// Weight matrix of a site tensor for environment/effective-Hamiltonian
// contractions: rows fuse (right_bond, s_out), cols fuse (left_bond, s_in).
MatrixXcd w_out_mat(const MpoTensor& t) {
  const Index dl = t.left_dim(), dr = t.right_dim();
  MatrixXcd m(dr * 2, dl * 2);
  for (int so = 0; so < 2; ++so)
    for (int si = 0; si < 2; ++si)
      for (Index wl = 0; wl < dl; ++wl)
        for (Index wr = 0; wr < dr; ++wr)
          m(wr * 2 + so, wl * 2 + si) = t.mats[so * 2 + si](wl, wr);
  return m;
}

// Left environment past one more site: L'[wr] = sum_{wl,so,si}
// W(wl,wr;so,si) A[so]^+ L[wl] A[si].
std::vector<MatrixXcd> update_left(const std::vector<MatrixXcd>& env,
                                   const MatrixXcd& wmat,
                                   const std::array<MatrixXcd, 2>& a) {
  const Index wl_dim = static_cast<Index>(env.size());
  const Index wr_dim = wmat.rows() / 2;
  const Index rows = env[0].rows(), cols = a[0].cols();
  MatrixXcd pmat(wl_dim * 2, rows * cols);
  for (Index wl = 0; wl < wl_dim; ++wl)
    for (int si = 0; si < 2; ++si) {
      const MatrixXcd p = env[wl] * a[si];
      pmat.row(wl * 2 + si) =
          Eigen::Map<const VectorXcd>(p.data(), rows * cols).transpose();
    }
  const MatrixXcd q = wmat * pmat;
  std::vector<MatrixXcd> out(wr_dim);
  VectorXcd scratch(rows * cols);
  for (Index wr = 0; wr < wr_dim; ++wr) {
    MatrixXcd acc = MatrixXcd::Zero(a[0].cols(), cols);
    for (int so = 0; so < 2; ++so) {
      scratch = q.row(wr * 2 + so).transpose();
      acc.noalias() +=
          a[so].adjoint() * Eigen::Map<const MatrixXcd>(scratch.data(), rows, cols);
    }
    out[wr] = std::move(acc);
  }
  return out;
}

// Right environment past one more site (to the left): R'[wl] =
// sum_{wr,so,si} W(wl,wr;so,si) A[si] R[wr] A[so]^+.
std::vector<MatrixXcd> update_right(const std::vector<MatrixXcd>& env,
                                    const MatrixXcd& wmat,
                                    const std::array<MatrixXcd, 2>& a) {
  const Index wr_dim = static_cast<Index>(env.size());
  const Index wl_dim = wmat.cols() / 2;
  const Index rows = env[0].rows(), cols = a[0].rows();
  MatrixXcd pmat(wr_dim * 2, rows * cols);
  for (Index wr = 0; wr < wr_dim; ++wr)
    for (int so = 0; so < 2; ++so) {
      const MatrixXcd p = env[wr] * a[so].adjoint();
      pmat.row(wr * 2 + so) =
          Eigen::Map<const VectorXcd>(p.data(), rows * cols).transpose();
    }
  // wmat maps (wl, s_in) rows of the transposed weight onto (wr, s_out).
  const MatrixXcd q = wmat.transpose() * pmat;
  std::vector<MatrixXcd> out(wl_dim);
  VectorXcd scratch(rows * cols);
  for (Index wl = 0; wl < wl_dim; ++wl) {
    MatrixXcd acc = MatrixXcd::Zero(a[0].rows(), cols);
    for (int si = 0; si < 2; ++si) {
      scratch = q.row(wl * 2 + si).transpose();
      acc.noalias() +=
          a[si] * Eigen::Map<const MatrixXcd>(scratch.data(), rows, cols);
    }
    out[wl] = std::move(acc);
  }
  return out;
}

/// Two-site effective Hamiltonian, applied through staged matrix products.
struct LocalProblem {
  const std::vector<MatrixXcd>* left;   // per wl, chi_bra x chi_ket
  const std::vector<MatrixXcd>* right;  // per wr, chi_ket x chi_bra
  const MatrixXcd* w1;                  // w_out_mat of site q
  const MatrixXcd* w2;                  // w_out_mat of site q+1
  Index chi_l = 0, chi_r = 0;

  Index dim() const { return 4 * chi_l * chi_r; }

  Theta apply(const Theta& theta) const {
    const Index wl_dim = static_cast<Index>(left->size());
    const Index wm_dim = w1->rows() / 2;
    const Index wr_dim = static_cast<Index>(right->size());
    const Index fused = chi_l * chi_r;

    // Stage 1: absorb the left environment, fuse (wl, s1) rows per s2.
    std::array<MatrixXcd, 2> x1;
    for (int s2 = 0; s2 < 2; ++s2) {
      x1[s2].resize(wl_dim * 2, fused);
      for (Index wl = 0; wl < wl_dim; ++wl)
        for (int s1 = 0; s1 < 2; ++s1) {
          const MatrixXcd lth = (*left)[wl] * theta[s1 * 2 + s2];
          x1[s2].row(wl * 2 + s1) =
              Eigen::Map<const VectorXcd>(lth.data(), fused).transpose();
        }
    }
    // Stage 2: first site tensor as one matrix product per s2.
    std::array<MatrixXcd, 2> x2;
    for (int s2 = 0; s2 < 2; ++s2) x2[s2].noalias() = (*w1) * x1[s2];
    // Regroup rows so the second site tensor contracts over (wm, s2).
    std::array<MatrixXcd, 2> x3;
    for (int s1o = 0; s1o < 2; ++s1o) {
      x3[s1o].resize(wm_dim * 2, fused);
      for (Index wm = 0; wm < wm_dim; ++wm)
        for (int s2 = 0; s2 < 2; ++s2)
          x3[s1o].row(wm * 2 + s2) = x2[s2].row(wm * 2 + s1o);
    }
    std::array<MatrixXcd, 2> x4;
    for (int s1o = 0; s1o < 2; ++s1o) x4[s1o].noalias() = (*w2) * x3[s1o];
    // Stage 3: absorb the right environment.
    Theta out;
    for (int c = 0; c < 4; ++c) out[c] = MatrixXcd::Zero(chi_l, chi_r);
    VectorXcd scratch(fused);
    for (Index wr = 0; wr < wr_dim; ++wr)
      for (int s1o = 0; s1o < 2; ++s1o)
        for (int s2o = 0; s2o < 2; ++s2o) {
          scratch = x4[s1o].row(wr * 2 + s2o).transpose();
          out[s1o * 2 + s2o].noalias() +=
              Eigen::Map<const MatrixXcd>(scratch.data(), chi_l, chi_r) *
              (*right)[wr];
        }
    return out;
  }

  VectorXcd apply_vec(const VectorXcd& v) const {
    return pack(apply(unpack(v)));
  }

  VectorXcd pack(const Theta& theta) const {
    VectorXcd v(dim());
    const Index fused = chi_l * chi_r;
    for (int c = 0; c < 4; ++c)
      v.segment(c * fused, fused) =
          Eigen::Map<const VectorXcd>(theta[c].data(), fused);
    return v;
  }

  Theta unpack(const VectorXcd& v) const {
    Theta theta;
    const Index fused = chi_l * chi_r;
    for (int c = 0; c < 4; ++c)
      theta[c] = Eigen::Map<const MatrixXcd>(v.data() + c * fused, chi_l, chi_r);
    return theta;
  }
};

// Lanczos with full reorthogonalization on the two-site problem; the start
// vector is the current theta, so converged sweeps finish in a few steps.
double local_lanczos(const LocalProblem& problem, Theta& theta,
                     int max_iters, double tol) {
  const Index n = problem.dim();
  VectorXcd v = problem.pack(theta);
  const double nrm = v.norm();
  if (nrm < 1e-14)
    throw std::runtime_error("local_lanczos: vanishing start vector");
  v /= nrm;

  const int m_cap = static_cast<int>(std::min<Index>(max_iters, n));
  std::vector<VectorXcd> basis;
  std::vector<double> alpha, beta;
  basis.push_back(v);
  double last_ritz = 0.0;
  bool have_ritz = false;
  Eigen::VectorXd ritz_vec;

  for (int k = 0; k < m_cap; ++k) {
    VectorXcd w = problem.apply_vec(basis[k]);
    const double a = std::real(basis[k].dot(w));
    alpha.push_back(a);
    w -= a * basis[k];
    if (k > 0) w -= beta[k - 1] * basis[k - 1];
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) w -= b.dot(w) * b;

    // Ritz value from the tridiagonal section.
    const int m = k + 1;
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) tri(i, i) = alpha[i];
    for (int i = 0; i + 1 < m; ++i) tri(i, i + 1) = tri(i + 1, i) = beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
    const double ritz = es.eigenvalues()(0);
    ritz_vec = es.eigenvectors().col(0);
    const bool settled = have_ritz && std::abs(ritz - last_ritz) < tol;
    last_ritz = ritz;
    have_ritz = true;

    const double b = w.norm();
    if (settled || b < 1e-13 || k + 1 == m_cap) break;
    beta.push_back(b);
    basis.push_back(w / b);
  }

  VectorXcd ground = VectorXcd::Zero(n);
  for (int i = 0; i < ritz_vec.size(); ++i) ground += ritz_vec(i) * basis[i];
  ground.normalize();
  theta = problem.unpack(ground);
  return last_ritz;
}

// Truncated SVD split of theta; returns the discarded weight. On a right
// move the orthogonality center lands on site q+1, otherwise on q.
double split_theta(const Theta& theta, Index max_bond, double cutoff,
                   bool move_right, std::array<MatrixXcd, 2>& left_site,
                   std::array<MatrixXcd, 2>& right_site) {
  const Index chi_l = theta[0].rows(), chi_r = theta[0].cols();
  MatrixXcd m(2 * chi_l, 2 * chi_r);
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2)
      m.block(s1 * chi_l, s2 * chi_r, chi_l, chi_r) = theta[s1 * 2 + s2];

  Eigen::JacobiSVD<MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double total = sv.squaredNorm();
  Index keep = std::min<Index>(max_bond, sv.size());
  while (keep > 1) {
    double tail = 0.0;
    for (Index i = keep - 1; i < sv.size(); ++i) tail += sv[i] * sv[i];
    if (tail > cutoff * total) break;
    --keep;
  }
  double discarded = 0.0;
  for (Index i = keep; i < sv.size(); ++i) discarded += sv[i] * sv[i];

  Eigen::VectorXd kept = sv.head(keep);
  kept /= kept.norm();  // keep the state normalized after truncation
  const MatrixXcd u = svd.matrixU().leftCols(keep);
  const MatrixXcd vd = svd.matrixV().leftCols(keep).adjoint();
  const MatrixXcd us = u * kept.asDiagonal();
  const MatrixXcd svd_right = kept.asDiagonal() * vd;
  for (int s1 = 0; s1 < 2; ++s1)
    left_site[s1] = (move_right ? u : us).middleRows(s1 * chi_l, chi_l);
  for (int s2 = 0; s2 < 2; ++s2)
    right_site[s2] = (move_right ? svd_right : vd).middleCols(s2 * chi_r, chi_r);
  return total > 0 ? discarded / total : 0.0;
}

Theta make_theta(const std::array<MatrixXcd, 2>& a,
                 const std::array<MatrixXcd, 2>& b) {
  Theta theta;
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2) theta[s1 * 2 + s2].noalias() = a[s1] * b[s2];
  return theta;
}

Mps random_product_state(int n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Mps mps;
  mps.tensors.resize(n);
  for (int q = 0; q < n; ++q) {
    Eigen::Vector2cd v;
    v << Complex(dist(gen), dist(gen)), Complex(dist(gen), dist(gen));
    v.normalize();
    for (int s = 0; s < 2; ++s) {
      mps.tensors[q][s].resize(1, 1);
      mps.tensors[q][s](0, 0) = v(s);
    }
  }
  return mps;
}

}  // namespace

Eigen::Index Mps::max_bond_dim() const {
  Index d = 1;
  for (const auto& t : tensors) d = std::max(d, t[0].cols());
  return d;
}

Eigen::VectorXcd Mps::to_statevector() const {
  const int n = length();
  if (n > kDenseWidthGuard)
    throw std::invalid_argument("Mps::to_statevector: too many sites");
  MatrixXcd acc = MatrixXcd::Ones(1, 1);
  for (int q = 0; q < n; ++q) {
    const Index rows = acc.rows(), cols = tensors[q][0].cols();
    MatrixXcd next(rows * 2, cols);
    for (int s = 0; s < 2; ++s)
      for (Index r = 0; r < rows; ++r)
        next.row(r + (static_cast<Index>(s) << q)) =
            acc.row(r) * tensors[q][s];
    acc = std::move(next);
  }
  return acc.col(0);
}

DmrgResult dmrg_run(const Mpo& mpo, const DmrgOptions& options) {
  const int n = mpo.length();
  if (n < 2) throw std::invalid_argument("dmrg_run: need at least two sites");

  std::vector<MatrixXcd> wmats(n);
  for (int q = 0; q < n; ++q) wmats[q] = w_out_mat(mpo.sites[q]);

  Mps mps = random_product_state(n, options.seed);

  // envs_left[q] covers sites [0, q); envs_right[q] covers [q, n).
  std::vector<std::vector<MatrixXcd>> envs_left(n + 1), envs_right(n + 1);
  envs_left[0] = {MatrixXcd::Ones(1, 1)};
  envs_right[n] = {MatrixXcd::Ones(1, 1)};
  for (int q = n - 1; q >= 1; --q)
    envs_right[q] = update_right(envs_right[q + 1], wmats[q], mps.tensors[q]);

  DmrgResult result;
  double energy = 0.0;
  for (int sweep = 0; sweep < options.sweeps; ++sweep) {
    const Index bond = (sweep < options.warmup_sweeps)
                           ? options.warmup_bond
                           : options.max_bond;
    double sweep_trunc = 0.0;
    auto optimize = [&](int q, bool move_right) {
      Theta theta = make_theta(mps.tensors[q], mps.tensors[q + 1]);
      LocalProblem problem{&envs_left[q], &envs_right[q + 2], &wmats[q],
                           &wmats[q + 1], theta[0].rows(), theta[0].cols()};
      energy = local_lanczos(problem, theta, options.lanczos_iters,
                             options.lanczos_tol);
      sweep_trunc += split_theta(theta, bond, options.truncation_cutoff,
                                 move_right, mps.tensors[q],
                                 mps.tensors[q + 1]);
      if (move_right)
        envs_left[q + 1] = update_left(envs_left[q], wmats[q], mps.tensors[q]);
      else
        envs_right[q + 1] =
            update_right(envs_right[q + 2], wmats[q + 1], mps.tensors[q + 1]);
    };
    for (int q = 0; q + 1 < n; ++q) optimize(q, true);
    for (int q = n - 2; q >= 0; --q) optimize(q, false);

    result.sweep_energies.push_back(energy);
    result.truncation_error = sweep_trunc;
    const std::size_t s = result.sweep_energies.size();
    if (sweep >= options.warmup_sweeps && s >= 2 &&
        std::abs(result.sweep_energies[s - 1] - result.sweep_energies[s - 2]) <
            options.energy_tol) {
      result.converged = true;
      break;
    }
  }
  result.energy = energy;
  result.state = std::move(mps);
  return result;
}

std::vector<double> dmrg_error_scan(const Mpo& mpo,
                                    const std::vector<int>& bonds,
                                    double reference_energy,
                                    const DmrgOptions& base) {
  std::vector<double> errors;
  errors.reserve(bonds.size());
  for (int bond : bonds) {
    DmrgOptions opts = base;
    opts.max_bond = bond;
    opts.warmup_bond = std::min(opts.warmup_bond, bond);
    errors.push_back(std::abs(dmrg_run(mpo, opts).energy - reference_energy));
  }
  return errors;
}

}  // namespace orfh
