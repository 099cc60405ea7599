#pragma once

#include <utility>

#include "tandel/sphere.hpp"

namespace tandel {

/// Member of the tangent family
///   T(z) = (w - 1) / (alpha*w - 1),  w = exp((alpha - 1) z / 8),
/// which fixes 0 with multiplier 1/8 and has asymptotic values 1 and 1/alpha.
class TangentParam {
 public:
  /// Throws Error{AlphaIsOne} for alpha == 1.
  explicit TangentParam(cplx alpha);

  cplx alpha() const { return alpha_; }
  /// Free asymptotic value 1/alpha. Throws Error{AlphaZero} for alpha == 0.
  cplx free_value() const;

 private:
  cplx alpha_;
};

enum class Clamp {
  None,
  UnderflowToOne,
  OverflowToRecipAlpha,
  PoleOverflowToInfinity,
  // Newton-family limits: the asymptotic value 0, and z - 1 along the tract.
  UnderflowToAsymptote,
  OverflowToShift,
};

struct EvalOutcome {
  SpherePoint value;
  Clamp clamp = Clamp::None;
};

namespace limits {
/// |Re| of an exponent beyond which exp() leaves the finite doubles.
inline constexpr double kExpThreshold = 709.0;
/// Finite outputs above this modulus are promoted to Infinity.
inline constexpr double kPoleCutoff = 1e12;
}  // namespace limits

/// T_alpha(z), with the essential-singularity limits applied explicitly.
/// Throws Error{EssentialSingularityInput} when z is Infinity.
EvalOutcome eval(const TangentParam& p, const SpherePoint& z);
EvalOutcome eval(const TangentParam& p, cplx z);

/// T'_alpha(z) = (alpha-1)^2 w / (8 (alpha w - 1)^2). Throws Error{PoleInput}
/// at (numerical) poles.
cplx eval_derivative(const TangentParam& p, cplx z);

/// d/dalpha T_alpha(z) at fixed z; used by the parameter-space solvers.
cplx eval_param_derivative(const TangentParam& p, cplx z);

/// k-th pole 8(-Log alpha + 2 pi i k)/(alpha - 1), principal branch.
/// Throws Error{NoPoles} for alpha == 0.
cplx pole(const TangentParam& p, long k);

/// Index of the pole nearest to z under the principal-branch labeling.
long nearest_pole_index(const TangentParam& p, cplx z);

/// Denominator alpha * exp((alpha - 1) z / 8) - 1, vanishing exactly at poles.
cplx pole_residual(const TangentParam& p, cplx z);

/// z_alpha = 1 + 1/alpha, the only candidate for a second fixed point of
/// multiplier 1/8. Throws Error{AlphaZero}.
cplx special_fixed_point(const TangentParam& p);

/// alpha^2 exp((alpha^2 - 1)/(8 alpha)) - 1. Vanishes exactly at parameters
/// where an affine involution swaps the basins of 0 and z_alpha. Normalized by
/// alpha^2 so the magnitude does not scale like 1/alpha^2 near 0.
cplx symmetry_residual(const TangentParam& p);

/// Conjugacy z -> alpha z between T_alpha and T_{1/alpha}:
/// alpha * T_alpha(z) == T_{1/alpha}(alpha z).
std::pair<TangentParam, cplx> involution_transport(const TangentParam& p, cplx z);

}  // namespace tandel
