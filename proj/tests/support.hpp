#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "tandel/sphere.hpp"

namespace testing {

using tandel::cplx;

// Uniform point in the disk |z| < r.
inline cplx random_in_disk(std::mt19937_64& rng, double r) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double rho = r * std::sqrt(u(rng));
  const double th = 2.0 * std::numbers::pi * u(rng);
  return std::polar(rho, th);
}

inline cplx random_in_annulus(std::mt19937_64& rng, double r0, double r1) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double rho = std::sqrt(r0 * r0 + (r1 * r1 - r0 * r0) * u(rng));
  return std::polar(rho, 2.0 * std::numbers::pi * u(rng));
}

inline double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace testing
