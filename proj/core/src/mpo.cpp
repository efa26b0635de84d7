#include "orfh/mpo.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace orfh {

namespace {

constexpr int kBatchSize = 48;

Eigen::Matrix2cd pauli_factor_matrix(char f) {
  Eigen::Matrix2cd m;
  switch (f) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

Mpo term_mpo(const PauliString& s, Complex coeff, int width) {
  Mpo mpo;
  mpo.sites.resize(width);
  for (int q = 0; q < width; ++q) {
    const Eigen::Matrix2cd f = pauli_factor_matrix(s.factor(q));
    for (int so = 0; so < 2; ++so)
      for (int si = 0; si < 2; ++si) {
        Eigen::MatrixXcd m(1, 1);
        m(0, 0) = f(so, si) * (q == 0 ? coeff : Complex{1.0, 0.0});
        mpo.sites[q].mats[so * 2 + si] = m;
      }
  }
  return mpo;
}

// Direct sum: boundary bonds stay 1 wide by concatenation.
void direct_sum(Mpo& a, const Mpo& b) {
  const int n = a.length();
  for (int q = 0; q < n; ++q) {
    for (int c = 0; c < 4; ++c) {
      const auto& ma = a.sites[q].mats[c];
      const auto& mb = b.sites[q].mats[c];
      const Eigen::Index rows =
          (q == 0) ? 1 : ma.rows() + mb.rows();
      const Eigen::Index cols =
          (q == n - 1) ? 1 : ma.cols() + mb.cols();
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows, cols);
      if (q == 0) {
        m.leftCols(ma.cols()) = ma;
        m.rightCols(mb.cols()) = mb;
      } else if (q == n - 1) {
        m.topRows(ma.rows()) = ma;
        m.bottomRows(mb.rows()) = mb;
      } else {
        m.topLeftCorner(ma.rows(), ma.cols()) = ma;
        m.bottomRightCorner(mb.rows(), mb.cols()) = mb;
      }
      a.sites[q].mats[c] = std::move(m);
    }
  }
}

// (left*4) x right matricization of a site tensor.
Eigen::MatrixXcd fuse_left(const MpoTensor& t) {
  const Eigen::Index dl = t.left_dim(), dr = t.right_dim();
  Eigen::MatrixXcd m(dl * 4, dr);
  for (int c = 0; c < 4; ++c) m.middleRows(c * dl, dl) = t.mats[c];
  return m;
}

void split_left(MpoTensor& t, const Eigen::MatrixXcd& m, Eigen::Index dl) {
  for (int c = 0; c < 4; ++c) t.mats[c] = m.middleRows(c * dl, dl);
}

// left x (right*4) matricization.
Eigen::MatrixXcd fuse_right(const MpoTensor& t) {
  const Eigen::Index dl = t.left_dim(), dr = t.right_dim();
  Eigen::MatrixXcd m(dl, dr * 4);
  for (int c = 0; c < 4; ++c) m.middleCols(c * dr, dr) = t.mats[c];
  return m;
}

void split_right(MpoTensor& t, const Eigen::MatrixXcd& m, Eigen::Index dr) {
  for (int c = 0; c < 4; ++c) t.mats[c] = m.middleCols(c * dr, dr);
}

}  // namespace

Eigen::Index Mpo::max_bond_dim() const {
  Eigen::Index d = 1;
  for (const auto& s : sites) d = std::max(d, s.right_dim());
  return d;
}

void compress_mpo(Mpo& mpo, double tolerance) {
  const int n = mpo.length();
  if (n < 2) return;
  // Left-to-right QR pass: orthogonalize, push R forward.
  for (int q = 0; q + 1 < n; ++q) {
    const Eigen::Index dl = mpo.sites[q].left_dim();
    Eigen::MatrixXcd m = fuse_left(mpo.sites[q]);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
    const Eigen::Index rank = std::min(m.rows(), m.cols());
    Eigen::MatrixXcd qmat =
        qr.householderQ() * Eigen::MatrixXcd::Identity(m.rows(), rank);
    Eigen::MatrixXcd rmat =
        qr.matrixQR().topRows(rank).triangularView<Eigen::Upper>();
    split_left(mpo.sites[q], qmat, dl);
    for (int c = 0; c < 4; ++c)
      mpo.sites[q + 1].mats[c] = rmat * mpo.sites[q + 1].mats[c];
  }
  // Right-to-left truncating SVD pass.
  double discarded = 0.0;
  for (int q = n - 1; q > 0; --q) {
    const Eigen::Index dr = mpo.sites[q].right_dim();
    Eigen::MatrixXcd m = fuse_right(mpo.sites[q]);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
        m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv[0] : 0.0;
    Eigen::Index keep = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv[i] > tolerance * smax) keep = i + 1;
    keep = std::max<Eigen::Index>(keep, 1);
    for (Eigen::Index i = keep; i < sv.size(); ++i)
      discarded += sv[i] * sv[i];
    const Eigen::MatrixXcd vt = svd.matrixV().leftCols(keep).adjoint();
    split_right(mpo.sites[q], vt, dr);
    const Eigen::MatrixXcd carry =
        svd.matrixU().leftCols(keep) * sv.head(keep).asDiagonal();
    for (int c = 0; c < 4; ++c)
      mpo.sites[q - 1].mats[c] = mpo.sites[q - 1].mats[c] * carry;
  }
  mpo.compression_residual = std::sqrt(discarded);
}

Mpo compile_mpo(const PauliSum& sum, double tolerance) {
  const int n = sum.width();
  if (n < 1) throw std::invalid_argument("compile_mpo: empty sum");
  std::vector<std::pair<PauliString, Complex>> terms(sum.terms().begin(),
                                                     sum.terms().end());
  if (sum.identity_offset() != Complex{0.0, 0.0}) {
    PauliString id;
    id.width = n;
    terms.emplace_back(id, sum.identity_offset());
  }
  if (terms.empty()) {
    PauliString id;
    id.width = n;
    terms.emplace_back(id, Complex{0.0, 0.0});
  }

  Mpo acc = term_mpo(terms[0].first, terms[0].second, n);
  int in_batch = 1;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    direct_sum(acc, term_mpo(terms[i].first, terms[i].second, n));
    if (++in_batch >= kBatchSize) {
      compress_mpo(acc, tolerance);
      in_batch = 0;
    }
  }
  compress_mpo(acc, tolerance);
  return acc;
}

Complex mpo_element(const Mpo& mpo, std::uint64_t bra, std::uint64_t ket) {
  Eigen::RowVectorXcd v = Eigen::RowVectorXcd::Ones(1);
  for (int q = 0; q < mpo.length(); ++q) {
    const int so = static_cast<int>((bra >> q) & 1u);
    const int si = static_cast<int>((ket >> q) & 1u);
    v = v * mpo.sites[q].mats[so * 2 + si];
  }
  return v(0);
}

Eigen::MatrixXcd mpo_matrix(const Mpo& mpo) {
  const int n = mpo.length();
  if (n > kDenseWidthGuard)
    throw std::invalid_argument("mpo_matrix: too many sites");
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = mpo_element(mpo, r, c);
  return m;
}

}  // namespace orfh
