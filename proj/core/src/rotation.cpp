#include "orfh/rotation.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace orfh {

namespace {

/// Deterministic standard-normal stream: explicit Box-Muller on top of
/// mt19937_64 so the sequence does not depend on the standard library's
/// normal_distribution implementation.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : gen_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log1p(-u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  double uniform() {  // in [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace

double OrbitalRotation::unitarity_defect() const {
  const Eigen::MatrixXcd d =
      matrix * matrix.adjoint() -
      Eigen::MatrixXcd::Identity(dimension, dimension);
  return d.cwiseAbs().maxCoeff();
}

OrbitalRotation sample_rotation(int dimension, std::uint64_t seed,
                                bool real_flag) {
  if (dimension < 4 || dimension % 2 != 0)
    throw std::invalid_argument(
        "sample_rotation requires an even dimension >= 4");
  GaussianStream gauss(seed);
  Eigen::MatrixXcd g(dimension, dimension);
  for (int i = 0; i < dimension; ++i)
    for (int j = 0; j < dimension; ++j) {
      const double re = gauss.next();
      const double im = real_flag ? 0.0 : gauss.next();
      g(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the gauge so the distribution is Haar: multiply each column by the
  // phase (sign) of the matching R diagonal.
  for (int j = 0; j < dimension; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a == 0.0) ? Complex(1.0, 0.0) : d / a;
  }
  OrbitalRotation rot;
  rot.dimension = dimension;
  rot.matrix = real_flag ? q.real().cast<Complex>() : q;
  rot.seed = seed;
  rot.real_flag = real_flag;
  return rot;
}

CoefficientTensors rotate(const CoefficientTensors& tensors,
                          const OrbitalRotation& rotation) {
  const int n = tensors.n_spin_orbitals();
  if (rotation.dimension != n)
    throw std::invalid_argument("rotation dimension mismatch");
  if (tensors.convention() != TwoBodyConvention::kPqRs)
    throw std::invalid_argument("rotate expects kPqRs tensors");
  const Eigen::MatrixXcd& u = rotation.matrix;

  CoefficientTensors out(n);
  out.set_constant(tensors.constant());
  // h'_pq = sum_kl u_{kp} g_kl conj(u_{lq})
  out.one_body() = u.transpose() * tensors.one_body() * u.conjugate();

  // h'_pqrs = sum over sparse entries (k,l,m,n) of
  //   g_klmn u_{kp} conj(u_{lq}) u_{mr} conj(u_{ns}),
  // accumulated as outer products on the (pq),(rs) reshape.
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n * n, n * n);
  Eigen::VectorXcd a(n * n), b(n * n);
  for (const auto& [key, v] : tensors.two_body()) {
    const auto [k, l, m, nn] = key;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        a[p * n + q] = u(k, p) * std::conj(u(l, q));
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s)
        b[r * n + s] = u(m, r) * std::conj(u(nn, s));
    acc.noalias() += v * a * b.transpose();
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const Complex v = acc(p * n + q, r * n + s);
          if (std::abs(v) >= kCoeffTruncation)
            out.add_two_body(p, q, r, s, v);
        }
  if (rotation.real_flag && tensors.is_real(kCoeffTruncation)) {
    // Real orthogonal rotations of real tensors stay exactly real.
    out.one_body() = out.one_body().real().cast<Complex>();
    CoefficientTensors real_out(n);
    real_out.set_constant(Complex(out.constant().real(), 0.0));
    real_out.one_body() = out.one_body();
    for (const auto& [k2, v2] : out.two_body())
      real_out.add_two_body(k2[0], k2[1], k2[2], k2[3],
                            Complex(v2.real(), 0.0));
    return real_out;
  }
  return out;
}

}  // namespace orfh
