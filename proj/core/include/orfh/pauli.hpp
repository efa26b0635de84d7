#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace orfh {

using Complex = std::complex<double>;

/// Maximum qubit count for dense matrix construction.
inline constexpr int kDenseWidthGuard = 14;

/// Pauli terms with |coefficient| below this are dropped on merge.
inline constexpr double kCoeffTruncation = 1e-12;

/// A single Pauli string (tensor product of I/X/Y/Z factors) on `width`
/// qubits, stored in symplectic form. Qubit q carries X iff bit q of `x`
/// is set and no z bit, Z iff bit q of `z` only, Y iff both.
///
/// The represented operator is i^{|x&z|} * X^x * Z^z, i.e. a genuine
/// Pauli string with no extra phase.
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int width = 0;

  bool is_identity() const { return x == 0 && z == 0; }

  /// Factor on qubit q as a character in {I, X, Y, Z}.
  char factor(int q) const;

  /// Canonical text form, ascending qubit index: "X0 Z3". Identity -> "I".
  std::string to_string() const;

  /// Parse the canonical text form.
  static PauliString parse(const std::string& text, int width);

  bool operator==(const PauliString& other) const {
    return x == other.x && z == other.z;
  }
  /// Canonical ordering: first differing qubit decides, I < X < Y < Z.
  bool operator<(const PauliString& other) const;
};

/// Product P1 * P2 as (phase, string). Phase is a power of i.
std::pair<Complex, PauliString> multiply(const PauliString& a,
                                         const PauliString& b);

bool commutes(const PauliString& a, const PauliString& b);

/// True when the factors agree (or one is identity) on every qubit.
bool qubitwise_compatible(const PauliString& a, const PauliString& b);

/// Weighted sum of Pauli strings plus an identity offset. Terms are kept
/// merged and truncated at kCoeffTruncation; iteration order is the
/// canonical string order, so text output and greedy heuristics downstream
/// are deterministic.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(int width) : width_(width) {}

  int width() const { return width_; }
  Complex identity_offset() const { return identity_offset_; }
  void set_identity_offset(Complex c) { identity_offset_ = c; }

  const std::map<PauliString, Complex>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Accumulate coeff * string, merging with any existing term.
  void add_term(const PauliString& s, Complex coeff);
  void add(const PauliSum& other);
  void scale(Complex factor);

  /// Drop terms below the truncation threshold.
  void prune(double threshold = kCoeffTruncation);

  /// Keep only the real part of every coefficient (hermitization for
  /// sums known to be hermitian up to roundoff).
  PauliSum real_part() const;

  /// One term per line: "(<re>,<im>) X0 Z3". Identity offset first when
  /// nonzero, as "(<re>,<im>) I".
  std::string to_text() const;
  static PauliSum from_text(const std::string& text, int width);

 private:
  int width_ = 0;
  Complex identity_offset_{0.0, 0.0};
  std::map<PauliString, Complex> terms_;
};

PauliSum operator*(const PauliSum& a, const PauliSum& b);

/// Dense 2^width x 2^width matrix. Qubit 0 is the least significant bit of
/// the basis index. Throws std::invalid_argument above kDenseWidthGuard.
Eigen::MatrixXcd pauli_matrix(const PauliSum& sum);

/// P|v> for a single string with coefficient.
void apply_term(const PauliString& s, Complex coeff,
                const Eigen::VectorXcd& in, Eigen::VectorXcd& out);

/// H|v> for the full sum (identity offset included).
Eigen::VectorXcd apply(const PauliSum& sum, const Eigen::VectorXcd& v);

/// <v|H|v> for a normalized state; the real part of the quadratic form.
double expectation(const PauliSum& sum, const Eigen::VectorXcd& v);

}  // namespace orfh
