#pragma once

#include <optional>
#include <string_view>

#include "tandel/model_family.hpp"

namespace tandel {

struct IterationSettings {
  long max_iter = 5000;
  /// Capture disk around 0. Radius 2 is proof-backed only for |alpha| <= 1.
  double trap_radius = 2.0;
  double pole_cutoff = limits::kPoleCutoff;
  double cycle_tol = 1e-9;
  /// Newton residual bound for refined cycles, relative to max(1, |z|).
  double refine_tol = 1e-12;

  static IterationSettings rendering() { return {}; }
  static IterationSettings analysis() {
    IterationSettings s;
    s.max_iter = 100000;
    return s;
  }
};

struct CycleInfo {
  int period = 0;
  cplx representative;
  cplx multiplier;
};

struct OrbitFate {
  enum class Kind { CapturedByZero, AttractingCycle, PoleHit, Undecided };

  Kind kind = Kind::Undecided;
  long steps = 0;
  /// Present iff kind == AttractingCycle.
  std::optional<CycleInfo> cycle;
};

std::string_view to_string(OrbitFate::Kind kind);

/// Classifies the forward orbit of z0 under T_alpha.
/// Throws Error{ParamOutsideDisk} for |alpha| >= 1 and Error{InvalidSeed} for
/// a non-finite seed.
OrbitFate classify_orbit(const TangentParam& p, cplx z0, const IterationSettings& s);

/// Newton refinement of a period-`period` cycle of T_alpha from `guess`,
/// reduced to the minimal period. Throws Error{NoConvergence} or
/// Error{DegenerateDerivative}.
CycleInfo refine_cycle(const TangentParam& p, cplx guess, int period, const IterationSettings& s);

/// T_alpha^n(z), Infinity once any iterate is a pole.
SpherePoint iterate(const TangentParam& p, cplx z, long n);

}  // namespace tandel
