#pragma once

#include "tandel/sphere.hpp"

namespace tandel {

/// Universal constants of the conformal model g(z) = C tan(pi z) for the
/// basin of 0 of a fixed point with multiplier 1/8.
struct ModelConstants {
  double p_star;  ///< root of 2x ln(1/x) / (1 - x^2) = 1/8 in (0, 1)
  double t;       ///< (1 - p_star) / (1 + p_star)
  double C;       ///< atanh(t) / (pi t)
};

/// x -> 2x ln(1/x) / (1 - x^2), strictly increasing from (0,1) onto (0,1).
double pstar_objective(double x);

/// Bisection root of pstar_objective(x) = 1/8; |objective - 1/8| < tol.
double solve_pstar(double tol);

/// Computed once, then shared read-only.
const ModelConstants& model_constants();

double model_constant_C();

/// C tan(pi z). Throws Error{PoleInput} at 1/2 + k.
cplx eval_model_g(cplx z);
cplx eval_model_g_derivative(cplx z);

}  // namespace tandel
