#include "tandel/conjugacy_model.hpp"

#include <algorithm>
#include <numbers>

#include "tandel/error.hpp"

namespace tandel {

double pstar_objective(double x) { return 2.0 * x * std::log(1.0 / x) / (1.0 - x * x); }

double solve_pstar(double tol) {
  tol = std::clamp(tol, 1e-16, 1e-6);
  double lo = 1e-12;
  double hi = 1.0 - 1e-12;
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double r = pstar_objective(mid) - 0.125;
    if (std::abs(r) < tol || hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * mid) break;
    (r < 0.0 ? lo : hi) = mid;
  }
  return mid;
}

const ModelConstants& model_constants() {
  static const ModelConstants constants = [] {
    const double p = solve_pstar(1e-15);
    const double t = (1.0 - p) / (1.0 + p);
    return ModelConstants{p, t, std::atanh(t) / (std::numbers::pi * t)};
  }();
  return constants;
}

double model_constant_C() { return model_constants().C; }

cplx eval_model_g(cplx z) {
  const cplx c = std::cos(std::numbers::pi * z);
  if (std::abs(c) < 1e-15) throw Error(ErrorCode::PoleInput, "tan(pi z) has a pole at 1/2 + k");
  return model_constant_C() * std::tan(std::numbers::pi * z);
}

cplx eval_model_g_derivative(cplx z) {
  const cplx c = std::cos(std::numbers::pi * z);
  if (std::abs(c) < 1e-15) throw Error(ErrorCode::PoleInput, "tan(pi z) has a pole at 1/2 + k");
  return model_constant_C() * std::numbers::pi / (c * c);
}

}  // namespace tandel
