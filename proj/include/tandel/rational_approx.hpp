#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tandel/orbit_engine.hpp"
#include "tandel/viewport.hpp"

namespace tandel {

/// T_{alpha,k} = M o P_k o N with M(z) = (z-1)/(alpha z - 1),
/// P_k(z) = (1 + z/k)^k and N(z) = (alpha - 1) z / 8.
struct RationalParam {
  /// Throws Error{AlphaIsOne} for alpha == 1, Error{InvalidArgument} for k < 1.
  RationalParam(cplx alpha, int k);

  cplx alpha;
  int k;
};

SpherePoint eval_rational(const RationalParam& p, const SpherePoint& z);
SpherePoint eval_rational(const RationalParam& p, cplx z);

/// c = -8k/(alpha - 1), the finite critical point; it maps to 1.
cplx finite_critical_point(const RationalParam& p);

/// Outcome of following 1/alpha for n steps, shared by the mask grids and the
/// A_n renderer.
struct AnPixel {
  bool member = false;
  bool pole_hit = false;
  /// First step j <= n whose iterate lies in the closed disk of radius 2 (or
  /// breaks the 1/delta bound); n when the point is a member.
  std::uint32_t step = 0;
};

/// Membership of alpha in A_n (k absent) or A_{n,k}, optionally restricted to
/// |iterates| < 1/delta. A pole hit of T_alpha counts as a member unless
/// delta is given.
AnPixel classify_An_point(cplx alpha, int n, std::optional<int> k, std::optional<double> delta);

/// Row-major membership mask over `grid` (1 = member).
/// Throws Error{GridOutsideHalfDisk} unless every pixel has 0 < |alpha| < 1/2.
std::vector<std::uint8_t> classify_An_grid(int n, std::optional<int> k, const Viewport& grid,
                                           std::optional<double> delta, const IterationSettings& s);

/// Largest chordal distance between T_{alpha,k}(z) and T_alpha(z) over the
/// sample product.
double approximation_error(std::span<const cplx> alphas, int k, std::span<const cplx> zs);
double approximation_error(const Viewport& alpha_window, int k, const Viewport& z_window);

/// Largest |T_{alpha,k}(z)| over the sample product (Infinity maps to +inf).
double max_image_modulus(std::span<const cplx> alphas, int k, std::span<const cplx> zs);

/// Polar sample grid of the open disk: `rings` radii times `spokes` angles,
/// plus the center.
std::vector<cplx> disk_samples(cplx center, double radius, int rings, int spokes);

/// `count` equally spaced points on the circle |z - center| = radius.
std::vector<cplx> circle_samples(cplx center, double radius, int count);

}  // namespace tandel
