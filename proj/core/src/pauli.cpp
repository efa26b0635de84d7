#include "orfh/pauli.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace orfh {

namespace {

Complex i_power(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

int popcount(std::uint64_t v) { return std::popcount(v); }

}  // namespace

char PauliString::factor(int q) const {
  const bool bx = (x >> q) & 1u;
  const bool bz = (z >> q) & 1u;
  if (bx && bz) return 'Y';
  if (bx) return 'X';
  if (bz) return 'Z';
  return 'I';
}

std::string PauliString::to_string() const {
  if (is_identity()) return "I";
  std::string out;
  for (int q = 0; q < width; ++q) {
    const char f = factor(q);
    if (f == 'I') continue;
    if (!out.empty()) out += ' ';
    out += f;
    out += std::to_string(q);
  }
  return out;
}

PauliString PauliString::parse(const std::string& text, int width) {
  PauliString s;
  s.width = width;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "I") continue;
    if (tok.size() < 2)
      throw std::invalid_argument("bad Pauli factor: " + tok);
    const char f = tok[0];
    const int q = std::stoi(tok.substr(1));
    if (q < 0 || q >= width)
      throw std::invalid_argument("qubit index out of range: " + tok);
    switch (f) {
      case 'X': s.x |= 1ull << q; break;
      case 'Y': s.x |= 1ull << q; s.z |= 1ull << q; break;
      case 'Z': s.z |= 1ull << q; break;
      default: throw std::invalid_argument("bad Pauli factor: " + tok);
    }
  }
  return s;
}

bool PauliString::operator<(const PauliString& other) const {
  const int w = std::max(width, other.width);
  for (int q = 0; q < w; ++q) {
    auto rank = [q](const PauliString& s) {
      const int bx = static_cast<int>((s.x >> q) & 1u);
      const int bz = static_cast<int>((s.z >> q) & 1u);
      // I=0 < X=1 < Y=2 < Z=3
      return (bx && bz) ? 2 : (bx ? 1 : (bz ? 3 : 0));
    };
    const int ra = rank(*this);
    const int rb = rank(other);
    if (ra != rb) return ra < rb;
  }
  return false;
}

std::pair<Complex, PauliString> multiply(const PauliString& a,
                                         const PauliString& b) {
  PauliString out;
  out.width = std::max(a.width, b.width);
  out.x = a.x ^ b.x;
  out.z = a.z ^ b.z;
  // a = i^{|xa&za|} X^xa Z^za etc.; X^x Z^z reordering gives (-1)^{za&xb}.
  const int exponent = popcount(a.x & a.z) + popcount(b.x & b.z) +
                       2 * popcount(a.z & b.x) - popcount(out.x & out.z);
  return {i_power(exponent), out};
}

bool commutes(const PauliString& a, const PauliString& b) {
  // Strings commute iff the symplectic product is even.
  return ((popcount(a.x & b.z) - popcount(a.z & b.x)) & 1) == 0;
}

bool qubitwise_compatible(const PauliString& a, const PauliString& b) {
  const std::uint64_t both = (a.x | a.z) & (b.x | b.z);
  return ((a.x ^ b.x) & both) == 0 && ((a.z ^ b.z) & both) == 0;
}

void PauliSum::add_term(const PauliString& s, Complex coeff) {
  if (s.is_identity()) {
    identity_offset_ += coeff;
    return;
  }
  PauliString key = s;
  key.width = width_;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) it->second += coeff;
}

void PauliSum::add(const PauliSum& other) {
  identity_offset_ += other.identity_offset_;
  for (const auto& [s, c] : other.terms_) add_term(s, c);
}

void PauliSum::scale(Complex factor) {
  identity_offset_ *= factor;
  for (auto& [s, c] : terms_) c *= factor;
}

void PauliSum::prune(double threshold) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < threshold)
      it = terms_.erase(it);
    else
      ++it;
  }
}

PauliSum PauliSum::real_part() const {
  PauliSum out(width_);
  out.identity_offset_ = Complex(identity_offset_.real(), 0.0);
  for (const auto& [s, c] : terms_) out.add_term(s, Complex(c.real(), 0.0));
  out.prune();
  return out;
}

std::string PauliSum::to_text() const {
  std::ostringstream out;
  out.precision(17);
  if (identity_offset_ != Complex(0.0, 0.0)) {
    out << '(' << identity_offset_.real() << ',' << identity_offset_.imag()
        << ") I\n";
  }
  for (const auto& [s, c] : terms_) {
    out << '(' << c.real() << ',' << c.imag() << ") " << s.to_string() << '\n';
  }
  return out.str();
}

PauliSum PauliSum::from_text(const std::string& text, int width) {
  PauliSum sum(width);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto close = line.find(')');
    if (line.front() != '(' || close == std::string::npos)
      throw std::invalid_argument("bad PauliSum line: " + line);
    const auto comma = line.find(',');
    const double re = std::stod(line.substr(1, comma - 1));
    const double im = std::stod(line.substr(comma + 1, close - comma - 1));
    const PauliString s = PauliString::parse(line.substr(close + 1), width);
    sum.add_term(s, Complex(re, im));
  }
  return sum;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  PauliSum out(std::max(a.width(), b.width()));
  out.set_identity_offset(a.identity_offset() * b.identity_offset());
  for (const auto& [sb, cb] : b.terms())
    out.add_term(sb, a.identity_offset() * cb);
  for (const auto& [sa, ca] : a.terms()) {
    out.add_term(sa, ca * b.identity_offset());
    for (const auto& [sb, cb] : b.terms()) {
      auto [phase, s] = multiply(sa, sb);
      out.add_term(s, phase * ca * cb);
    }
  }
  out.prune();
  return out;
}

Eigen::MatrixXcd pauli_matrix(const PauliSum& sum) {
  const int w = sum.width();
  if (w > kDenseWidthGuard)
    throw std::invalid_argument("pauli_matrix: width " + std::to_string(w) +
                                " exceeds guard " +
                                std::to_string(kDenseWidthGuard));
  const std::size_t dim = std::size_t{1} << w;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  m.diagonal().array() += sum.identity_offset();
  for (const auto& [s, c] : sum.terms()) {
    const Complex yphase = i_power(popcount(s.x & s.z));
    for (std::size_t b = 0; b < dim; ++b) {
      const double sign = (popcount(s.z & b) & 1) ? -1.0 : 1.0;
      m(b ^ s.x, b) += c * yphase * sign;
    }
  }
  return m;
}

void apply_term(const PauliString& s, Complex coeff, const Eigen::VectorXcd& in,
                Eigen::VectorXcd& out) {
  const std::size_t dim = in.size();
  const Complex base = coeff * i_power(popcount(s.x & s.z));
  for (std::size_t b = 0; b < dim; ++b) {
    const double sign = (popcount(s.z & b) & 1) ? -1.0 : 1.0;
    out[b ^ s.x] += base * sign * in[b];
  }
}

Eigen::VectorXcd apply(const PauliSum& sum, const Eigen::VectorXcd& v) {
  Eigen::VectorXcd out = sum.identity_offset() * v;
  for (const auto& [s, c] : sum.terms()) apply_term(s, c, v, out);
  return out;
}

double expectation(const PauliSum& sum, const Eigen::VectorXcd& v) {
  return std::real(v.dot(orfh::apply(sum, v)));
}

}  // namespace orfh
