#include "tandel/rational_approx.hpp"

#include <algorithm>
#include <numbers>

#include "tandel/error.hpp"

namespace tandel {

namespace {

cplx expm1c(cplx z) {
  const double s = std::sin(0.5 * z.imag());
  return {std::expm1(z.real()) * std::cos(z.imag()) - 2.0 * s * s, std::exp(z.real()) * std::sin(z.imag())};
}

cplx log1pc(cplx z) {
  const double x = z.real();
  const double y = z.imag();
  return {0.5 * std::log1p(2.0 * x + x * x + y * y), std::atan2(y, 1.0 + x)};
}

cplx binary_power(cplx base, int k) {
  cplx result = 1.0;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

SpherePoint promote(cplx v) {
  if (!is_finite(v) || std::abs(v) > limits::kPoleCutoff) return SpherePoint::infinity();
  return SpherePoint::finite(v);
}

// M(P) = (P - 1)/(alpha P - 1), given P - 1 directly.
SpherePoint mobius_from_pm1(cplx alpha, cplx pm1) {
  return promote(pm1 / (alpha * pm1 + (alpha - 1.0)));
}

SpherePoint mobius_at_infinity(cplx alpha) {
  if (alpha == cplx(0.0, 0.0)) return SpherePoint::infinity();
  return promote(1.0 / alpha);
}

}  // namespace

RationalParam::RationalParam(cplx a, int kk) : alpha(a), k(kk) {
  if (alpha == cplx(1.0, 0.0)) throw Error(ErrorCode::AlphaIsOne, "alpha = 1 is excluded");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "approximant degree k must be at least 1");
}

SpherePoint eval_rational(const RationalParam& p, const SpherePoint& z) {
  // P_k has a pole of order k at infinity.
  if (z.is_infinity()) return mobius_at_infinity(p.alpha);
  return eval_rational(p, z.value());
}

SpherePoint eval_rational(const RationalParam& p, cplx z) {
  const double k = static_cast<double>(p.k);
  const cplx u = (p.alpha - 1.0) * z / 8.0;
  const cplx q = u / k;
  if (std::abs(q) < 1.0) {
    const cplx e = k * log1pc(q);
    if (e.real() > limits::kExpThreshold) return mobius_at_infinity(p.alpha);
    if (e.real() < -limits::kExpThreshold) return mobius_from_pm1(p.alpha, -1.0);
    return mobius_from_pm1(p.alpha, expm1c(e));
  }
  const cplx pk = binary_power(1.0 + q, p.k);
  if (!is_finite(pk)) return mobius_at_infinity(p.alpha);
  if (std::abs(pk) > 1.0) {
    const cplx inv = 1.0 / pk;
    return promote((1.0 - inv) / (p.alpha - inv));
  }
  return mobius_from_pm1(p.alpha, pk - 1.0);
}

cplx finite_critical_point(const RationalParam& p) {
  return -8.0 * static_cast<double>(p.k) / (p.alpha - 1.0);
}

AnPixel classify_An_point(cplx alpha, int n, std::optional<int> k, std::optional<double> delta) {
  constexpr double kTrap = 2.0;
  const double bound = delta ? 1.0 / *delta : std::numeric_limits<double>::infinity();
  const auto un = static_cast<std::uint32_t>(n);
  SpherePoint z = SpherePoint::finite(1.0 / alpha);

  if (k) {
    // Literal definition: only the n-th iterate decides, poles included.
    const RationalParam p(alpha, *k);
    std::optional<std::uint32_t> first_inside;
    bool any_pole = false;
    for (int j = 0; j <= n; ++j) {
      if (j > 0) z = eval_rational(p, z);
      if (z.is_infinity()) {
        any_pole = true;
        if (delta) return {false, true, static_cast<std::uint32_t>(j)};
        continue;
      }
      const double m = std::abs(z.value());
      if (m >= bound) return {false, false, static_cast<std::uint32_t>(j)};
      if (m <= kTrap && !first_inside) first_inside = static_cast<std::uint32_t>(j);
    }
    const bool member = z.is_infinity() || std::abs(z.value()) > kTrap;
    if (member) return {true, any_pole, un};
    return {false, any_pole, first_inside.value_or(un)};
  }

  // The closed trap disk is forward invariant, so capture is final.
  const TangentParam p(alpha);
  for (int j = 0; j <= n; ++j) {
    if (j > 0) {
      z = eval(p, z.value()).value;
      if (z.is_infinity()) return {!delta.has_value(), true, delta ? static_cast<std::uint32_t>(j) : un};
    }
    const double m = std::abs(z.value());
    if (m <= kTrap) return {false, false, static_cast<std::uint32_t>(j)};
    if (m >= bound) return {false, false, static_cast<std::uint32_t>(j)};
  }
  return {true, false, un};
}

std::vector<std::uint8_t> classify_An_grid(int n, std::optional<int> k, const Viewport& grid,
                                           std::optional<double> delta, const IterationSettings&) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be non-negative");
  std::vector<std::uint8_t> mask(grid.size());
  for (std::uint32_t j = 0; j < grid.py; ++j) {
    for (std::uint32_t i = 0; i < grid.px; ++i) {
      const cplx a = grid.pixel(i, j);
      if (!(std::abs(a) < 0.5) || a == cplx(0.0, 0.0))
        throw Error(ErrorCode::GridOutsideHalfDisk, "every grid parameter must satisfy 0 < |alpha| < 1/2");
      mask[static_cast<std::size_t>(j) * grid.px + i] = classify_An_point(a, n, k, delta).member ? 1 : 0;
    }
  }
  return mask;
}

double approximation_error(std::span<const cplx> alphas, int k, std::span<const cplx> zs) {
  double worst = 0.0;
  for (const cplx a : alphas) {
    const TangentParam exact(a);
    const RationalParam approx(a, k);
    for (const cplx z : zs) {
      worst = std::max(worst, chordal_distance(eval_rational(approx, z), eval(exact, z).value));
    }
  }
  return worst;
}

double approximation_error(const Viewport& alpha_window, int k, const Viewport& z_window) {
  std::vector<cplx> alphas;
  std::vector<cplx> zs;
  for (std::uint32_t j = 0; j < alpha_window.py; ++j)
    for (std::uint32_t i = 0; i < alpha_window.px; ++i) alphas.push_back(alpha_window.pixel(i, j));
  for (std::uint32_t j = 0; j < z_window.py; ++j)
    for (std::uint32_t i = 0; i < z_window.px; ++i) zs.push_back(z_window.pixel(i, j));
  return approximation_error(alphas, k, zs);
}

double max_image_modulus(std::span<const cplx> alphas, int k, std::span<const cplx> zs) {
  double worst = 0.0;
  for (const cplx a : alphas) {
    const RationalParam p(a, k);
    for (const cplx z : zs) {
      const SpherePoint v = eval_rational(p, z);
      worst = std::max(worst, v.is_infinity() ? std::numeric_limits<double>::infinity() : std::abs(v.value()));
    }
  }
  return worst;
}

std::vector<cplx> disk_samples(cplx center, double radius, int rings, int spokes) {
  std::vector<cplx> out{center};
  for (int r = 1; r <= rings; ++r) {
    const double rho = radius * r / (rings + 1.0);
    for (int s = 0; s < spokes; ++s) out.push_back(center + std::polar(rho, 2.0 * std::numbers::pi * s / spokes));
  }
  return out;
}

std::vector<cplx> circle_samples(cplx center, double radius, int count) {
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int s = 0; s < count; ++s) out.push_back(center + std::polar(radius, 2.0 * std::numbers::pi * s / count));
  return out;
}

}  // namespace tandel
