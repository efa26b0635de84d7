#include "orfh/hubbard.hpp"

#include <stdexcept>

namespace orfh {

CoefficientTensors build_hubbard(const HubbardParams& params) {
  if (params.n_sites < 2)
    throw std::invalid_argument("build_hubbard requires n_sites >= 2");
  const int n = 2 * params.n_sites;
  CoefficientTensors t(n);
  for (int i = 0; i < params.n_sites; ++i) {
    for (int spin = 0; spin < 2; ++spin) {
      const int a = 2 * i + spin;
      const int b = (2 * i + 2 + spin) % n;
      t.one_body()(a, b) += -params.t;
      t.one_body()(b, a) += -params.t;
    }
    t.add_two_body(2 * i, 2 * i, 2 * i + 1, 2 * i + 1,
                   Complex(2.0 * params.u, 0.0));
  }
  t.one_body().diagonal().array() += Complex(-params.mu, 0.0);
  return t;
}

}  // namespace orfh
