#include "orfh/fermion.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace orfh {

CoefficientTensors::CoefficientTensors(int n_spin_orbitals)
    : n_(n_spin_orbitals),
      one_body_(Eigen::MatrixXcd::Zero(n_spin_orbitals, n_spin_orbitals)) {
  if (n_spin_orbitals < 1)
    throw std::invalid_argument("n_spin_orbitals must be positive");
}

Complex CoefficientTensors::two_body_at(int p, int q, int r, int s) const {
  const auto it = two_body_.find({p, q, r, s});
  return it == two_body_.end() ? Complex{0.0, 0.0} : it->second;
}

void CoefficientTensors::add_two_body(int p, int q, int r, int s,
                                      Complex value) {
  for (int idx : {p, q, r, s})
    if (idx < 0 || idx >= n_)
      throw std::out_of_range("two-body index out of range");
  auto [it, inserted] = two_body_.try_emplace({p, q, r, s}, value);
  if (!inserted) it->second += value;
}

void CoefficientTensors::prune_two_body(double threshold) {
  for (auto it = two_body_.begin(); it != two_body_.end();) {
    if (std::abs(it->second) < threshold)
      it = two_body_.erase(it);
    else
      ++it;
  }
}

bool CoefficientTensors::is_real(double tol) const {
  if (std::abs(constant_.imag()) > tol) return false;
  if ((one_body_.imag().array().abs() > tol).any()) return false;
  for (const auto& [k, v] : two_body_)
    if (std::abs(v.imag()) > tol) return false;
  return true;
}

double CoefficientTensors::hermiticity_defect() const {
  double defect = (one_body_ - one_body_.adjoint()).cwiseAbs().maxCoeff();
  for (const auto& [k, v] : two_body_) {
    // kPqRs: h_pqrs = conj(h_qpsr); kNormalOrdered: w_pqrs = conj(w_srqp)
    const TwoBodyKey conj_key =
        convention_ == TwoBodyConvention::kPqRs
            ? TwoBodyKey{k[1], k[0], k[3], k[2]}
            : TwoBodyKey{k[3], k[2], k[1], k[0]};
    defect = std::max(defect,
                      std::abs(v - std::conj(two_body_at(
                                       conj_key[0], conj_key[1], conj_key[2],
                                       conj_key[3]))));
  }
  return defect;
}

std::string CoefficientTensors::to_json() const {
  nlohmann::json j;
  j["n_spin_orbitals"] = n_;
  j["convention"] =
      convention_ == TwoBodyConvention::kPqRs ? "pq_rs" : "normal_ordered";
  j["constant"] = {constant_.real(), constant_.imag()};
  auto& ob = j["one_body"] = nlohmann::json::array();
  for (int p = 0; p < n_; ++p) {
    auto& row = ob.emplace_back(nlohmann::json::array());
    for (int q = 0; q < n_; ++q)
      row.push_back({one_body_(p, q).real(), one_body_(p, q).imag()});
  }
  auto& tb = j["two_body"] = nlohmann::json::array();
  for (const auto& [k, v] : two_body_)
    tb.push_back({k[0], k[1], k[2], k[3], v.real(), v.imag()});
  return j.dump(2);
}

CoefficientTensors CoefficientTensors::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  CoefficientTensors t(j.at("n_spin_orbitals").get<int>());
  if (j.contains("convention") && j["convention"] == "normal_ordered")
    t.set_convention(TwoBodyConvention::kNormalOrdered);
  if (j.contains("constant"))
    t.set_constant({j["constant"][0].get<double>(),
                    j["constant"][1].get<double>()});
  const auto& ob = j.at("one_body");
  for (int p = 0; p < t.n_spin_orbitals(); ++p)
    for (int q = 0; q < t.n_spin_orbitals(); ++q)
      t.one_body()(p, q) = {ob[p][q][0].get<double>(),
                            ob[p][q][1].get<double>()};
  for (const auto& e : j.at("two_body"))
    t.add_two_body(e[0].get<int>(), e[1].get<int>(), e[2].get<int>(),
                   e[3].get<int>(),
                   {e[4].get<double>(), e[5].get<double>()});
  return t;
}

CoefficientTensors normal_order(const CoefficientTensors& tensors) {
  if (tensors.convention() != TwoBodyConvention::kPqRs)
    return tensors;
  CoefficientTensors out(tensors.n_spin_orbitals());
  out.set_convention(TwoBodyConvention::kNormalOrdered);
  out.set_constant(tensors.constant());
  out.one_body() = tensors.one_body();
  // c+_p c_q c+_r c_s = delta_qr c+_p c_s - c+_p c+_r c_q c_s
  //                   = delta_qr c+_p c_s + c+_p c+_r c_s c_q
  for (const auto& [k, v] : tensors.two_body()) {
    const auto [p, q, r, s] = k;
    if (q == r) out.one_body()(p, s) += 0.5 * v;
    out.add_two_body(p, r, s, q, v);
  }
  out.prune_two_body();
  return out;
}

}  // namespace orfh
