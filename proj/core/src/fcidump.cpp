#include "orfh/fcidump.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace orfh {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::runtime_error("fcidump: line " + std::to_string(line) + ": " +
                           what);
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

FcidumpData parse_fcidump(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  // Namelist header: starts with &FCI, runs until a line containing
  // &END or a bare "/".
  std::string header;
  bool header_done = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string up = upper(line);
    if (header.empty() && up.find("&FCI") == std::string::npos)
      fail(line_no, "expected &FCI namelist header");
    header += up + "\n";
    if (up.find("&END") != std::string::npos ||
        up.find('/') != std::string::npos) {
      header_done = true;
      break;
    }
  }
  if (!header_done) fail(line_no, "unterminated namelist header");

  const auto field = [&](const std::string& key) -> int {
    const std::regex re(key + R"(\s*=\s*(\d+))");
    std::smatch m;
    if (!std::regex_search(header, m, re)) return -1;
    return std::stoi(m[1]);
  };
  const int norb = field("NORB");
  const int nelec = field("NELEC");
  if (norb <= 0) fail(line_no, "missing or invalid NORB");
  if (norb > 32) fail(line_no, "NORB too large (max 32)");

  Eigen::MatrixXd hcore = Eigen::MatrixXd::Zero(norb, norb);
  std::vector<double> eri(static_cast<std::size_t>(norb) * norb * norb * norb,
                          0.0);
  const auto eri_at = [norb, &eri](int i, int j, int k, int l) -> double& {
    return eri[((static_cast<std::size_t>(i) * norb + j) * norb + k) * norb +
               l];
  };
  double core = 0.0;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ls(line);
    double value;
    int i, j, k, l;
    if (!(ls >> value >> i >> j >> k >> l))
      fail(line_no, "malformed integral line");
    if (i < 0 || j < 0 || k < 0 || l < 0 || i > norb || j > norb ||
        k > norb || l > norb)
      fail(line_no, "index out of range for NORB=" + std::to_string(norb));
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      core = value;
    } else if (k == 0 && l == 0) {
      if (j == 0) continue;  // orbital-energy line, not part of H
      hcore(i - 1, j - 1) = value;
      hcore(j - 1, i - 1) = value;
    } else if (i == 0 || j == 0 || k == 0 || l == 0) {
      fail(line_no, "mixed zero/nonzero indices");
    } else {
      const int a = i - 1, b = j - 1, c = k - 1, d = l - 1;
      // 8-fold real-integral symmetry of (ij|kl).
      eri_at(a, b, c, d) = eri_at(b, a, c, d) = eri_at(a, b, d, c) =
          eri_at(b, a, d, c) = eri_at(c, d, a, b) = eri_at(d, c, a, b) =
              eri_at(c, d, b, a) = eri_at(d, c, b, a) = value;
    }
  }

  FcidumpData data;
  data.n_orbitals = norb;
  data.n_electrons = nelec;
  CoefficientTensors tensors(2 * norb);
  tensors.set_convention(TwoBodyConvention::kPqRs);
  tensors.set_constant(core);

  // Spin expansion, even = alpha, odd = beta. In the c+ c c+ c storage,
  //   1/2 (ij|kl) a+_p a_q a+_r a_s = two-electron part
  //                                 + 1/2 delta_qr one-body leakage,
  // so subtract 1/2 sum_q (iq|ql) from the one-body tensor (same spin).
  for (int i = 0; i < norb; ++i)
    for (int l = 0; l < norb; ++l) {
      double corr = 0.0;
      for (int q = 0; q < norb; ++q) corr += eri_at(i, q, q, l);
      for (int spin = 0; spin < 2; ++spin)
        tensors.one_body()(2 * i + spin, 2 * l + spin) =
            hcore(i, l) - 0.5 * corr;
    }
  for (int i = 0; i < norb; ++i)
    for (int j = 0; j < norb; ++j)
      for (int k = 0; k < norb; ++k)
        for (int l = 0; l < norb; ++l) {
          const double v = eri_at(i, j, k, l);
          if (std::abs(v) < kCoeffTruncation) continue;
          for (int sa = 0; sa < 2; ++sa)
            for (int sb = 0; sb < 2; ++sb)
              tensors.add_two_body(2 * i + sa, 2 * j + sa, 2 * k + sb,
                                   2 * l + sb, v);
        }
  data.tensors = std::move(tensors);
  return data;
}

FcidumpData read_fcidump(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("fcidump: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fcidump(buf.str());
}

std::string write_fcidump_style(const CoefficientTensors& tensors) {
  std::ostringstream out;
  out.precision(16);
  out << std::scientific;
  const int n = tensors.n_spin_orbitals();
  out << "&FCI NORB=" << n << ",SPINORB=1,\n&END\n";
  const auto entry = [&](Complex v, int p, int q, int r, int s) {
    out << v.real() << ' ' << v.imag() << ' ' << p << ' ' << q << ' ' << r
        << ' ' << s << '\n';
  };
  for (const auto& [key, value] : tensors.two_body())
    entry(value, key[0] + 1, key[1] + 1, key[2] + 1, key[3] + 1);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (std::abs(tensors.one_body()(p, q)) >= kCoeffTruncation)
        entry(tensors.one_body()(p, q), p + 1, q + 1, 0, 0);
  entry(tensors.constant(), 0, 0, 0, 0);
  return out.str();
}

}  // namespace orfh
