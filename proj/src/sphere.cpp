#include "tandel/sphere.hpp"

namespace tandel {

double chordal_distance(const SpherePoint& a, const SpherePoint& b) {
  if (a.is_infinity() && b.is_infinity()) return 0.0;
  if (a.is_infinity()) return 2.0 / std::sqrt(1.0 + std::norm(b.value()));
  if (b.is_infinity()) return 2.0 / std::sqrt(1.0 + std::norm(a.value()));
  const cplx za = a.value();
  const cplx zb = b.value();
  return 2.0 * std::abs(za - zb) / std::sqrt((1.0 + std::norm(za)) * (1.0 + std::norm(zb)));
}

}  // namespace tandel
