#include <cmath>

#include "johnson/heun.hpp"
#include "johnson/terwilliger.hpp"

namespace johnson {

std::vector<HahnResidual> check_hahn_algebra(const GraphSpec& spec) {
  const double n = spec.n(), k = spec.k();
  const double scale = 2.0 * k * (n - k) / (n * (n - 1.0));
  std::vector<HahnResidual> out;
  for (const auto& label : enumerate_modules(spec)) {
    const Matrix k2 = module_A_action(label, spec).dense();
    Vector dual(label.dim);
    for (int r = 0; r < label.dim; ++r) {
      dual(r) = scale * dual_eigenvalue_at(label.first_distance(spec) + r, spec);
    }
    const Matrix k1 = dual.asDiagonal();
    const Matrix k3 = k1 * k2 - k2 * k1;
    const Matrix id = Matrix::Identity(label.dim, label.dim);
    const auto h = hahn_constants(label.j1, label.j2, spec);

    const Matrix r1 = k2 * k3 - k3 * k2 - (h.a * (k1 * k2 + k2 * k1) + h.b * k2 + h.c1 * k1 + h.d1 * id);
    const Matrix r2 = k3 * k1 - k1 * k3 - (h.a * k1 * k1 + h.b * k1 + h.c2 * k2 + h.d2 * id);
    out.push_back({label, r1.cwiseAbs().maxCoeff(), r2.cwiseAbs().maxCoeff()});
  }
  return out;
}

}  // namespace johnson
