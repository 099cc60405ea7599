#pragma once

#include <optional>

#include "tandel/model_family.hpp"
#include "tandel/orbit_engine.hpp"

namespace tandel {

/// Newton map of f_a(z) = z + a e^z:
///   N_a(z) = z - f_a(z)/f_a'(z) = a e^z (z - 1) / (1 + a e^z).
class NewtonParam {
 public:
  /// Throws Error{AZero}.
  explicit NewtonParam(cplx a);
  cplx a() const { return a_; }

 private:
  cplx a_;
};

struct NewtonFate {
  enum class Kind { ConvergedToRoot, AttractingCycle, PoleHit, Undecided };

  Kind kind = Kind::Undecided;
  long steps = 0;
  std::optional<cplx> root;
  std::optional<CycleInfo> cycle;
};

std::string_view to_string(NewtonFate::Kind kind);

cplx newton_target(const NewtonParam& p, cplx z);  ///< f_a(z)

EvalOutcome eval_newton(const NewtonParam& p, cplx z);

/// N_a'(z) = f f'' / f'^2. Throws Error{PoleInput}.
cplx eval_newton_derivative(const NewtonParam& p, cplx z);

/// Log(-1/a) + 2 pi i k, where 1 + a e^z vanishes.
cplx newton_pole(const NewtonParam& p, long k);

/// Orbit of the free asymptotic value 0.
NewtonFate classify_newton_orbit(const NewtonParam& p, const IterationSettings& s);

/// Orbit of an arbitrary seed, for dynamical-plane rendering.
NewtonFate classify_newton_orbit_from(const NewtonParam& p, cplx z0, const IterationSettings& s);

CycleInfo refine_newton_cycle(const NewtonParam& p, cplx guess, int period, const IterationSettings& s);

}  // namespace tandel
