#include "orfh/jordan_wigner.hpp"

#include <stdexcept>

namespace orfh {

PauliSum jw_ladder(const LadderOp& op, int width) {
  if (op.mode < 0 || op.mode >= width)
    throw std::out_of_range("mode index out of range");
  const std::uint64_t parity = (std::uint64_t{1} << op.mode) - 1;
  PauliString xs, ys;
  xs.width = ys.width = width;
  xs.x = std::uint64_t{1} << op.mode;
  xs.z = parity;
  ys.x = std::uint64_t{1} << op.mode;
  ys.z = parity | (std::uint64_t{1} << op.mode);
  PauliSum sum(width);
  const double im = op.dagger ? -0.5 : 0.5;
  sum.add_term(xs, Complex(0.5, 0.0));
  sum.add_term(ys, Complex(0.0, im));
  return sum;
}

PauliSum jw_product(const std::vector<LadderOp>& ops, Complex coeff,
                    int width) {
  PauliSum acc(width);
  acc.set_identity_offset(coeff);
  for (const auto& op : ops) acc = acc * jw_ladder(op, width);
  return acc;
}

PauliSum jordan_wigner(const CoefficientTensors& tensors) {
  const int n = tensors.n_spin_orbitals();
  PauliSum sum(n);
  sum.set_identity_offset(tensors.constant());
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const Complex h = tensors.one_body()(p, q);
      if (h == Complex{0.0, 0.0}) continue;
      sum.add(jw_product({{p, true}, {q, false}}, h, n));
    }
  const bool normal =
      tensors.convention() == TwoBodyConvention::kNormalOrdered;
  for (const auto& [k, v] : tensors.two_body()) {
    const auto [p, q, r, s] = k;
    const std::vector<LadderOp> ops =
        normal ? std::vector<LadderOp>{{p, true}, {q, true}, {r, false},
                                       {s, false}}
               : std::vector<LadderOp>{{p, true}, {q, false}, {r, true},
                                       {s, false}};
    sum.add(jw_product(ops, 0.5 * v, n));
  }
  sum.prune();
  return sum;
}

}  // namespace orfh
