#pragma once

// Family-independent orbit machinery shared by the tangent and Newton
// classifiers. Not part of the public surface.

#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include "tandel/error.hpp"
#include "tandel/orbit_engine.hpp"

namespace tandel::detail {

enum class RawKind { Absorbed, Cycle, Pole, Undecided };

struct RawOrbit {
  RawKind kind = RawKind::Undecided;
  long steps = 0;
  cplx point;
  std::optional<CycleInfo> cycle;
};

// Step: SpherePoint(cplx).  Absorbed: bool(cplx z, long step).
// Confirm: std::optional<CycleInfo>(cplx z, int period).
//
// Brent cycle detection. The tortoise jumps to the hare at powers of two; a
// repeat within cycle_tol proposes a period that Confirm must accept,
// otherwise the search continues.
template <class Step, class Absorbed, class Confirm>
RawOrbit run_orbit(Step&& step, Absorbed&& absorbed, Confirm&& confirm, cplx z0, const IterationSettings& s) {
  cplx z = z0;
  if (absorbed(z, 0L)) return {RawKind::Absorbed, 0, z, std::nullopt};

  cplx tortoise = z;
  long power = 1;
  long lam = 0;
  for (long n = 1; n <= s.max_iter; ++n) {
    const SpherePoint next = step(z);
    if (next.is_infinity() || std::abs(next.value()) > s.pole_cutoff) return {RawKind::Pole, n, z, std::nullopt};
    z = next.value();
    if (absorbed(z, n)) return {RawKind::Absorbed, n, z, std::nullopt};

    ++lam;
    if (std::abs(z - tortoise) < s.cycle_tol) {
      if (auto info = confirm(z, static_cast<int>(lam))) return {RawKind::Cycle, n, z, info};
      tortoise = z;
      power = 1;
      lam = 0;
      continue;
    }
    if (lam == power) {
      tortoise = z;
      power *= 2;
      lam = 0;
    }
  }
  return {RawKind::Undecided, s.max_iter, z, std::nullopt};
}

// Step: SpherePoint(cplx).  Deriv: cplx(cplx).
template <class Step, class Deriv>
class CycleRefiner {
 public:
  CycleRefiner(Step step, Deriv deriv, const IterationSettings& s) : step_(step), deriv_(deriv), s_(s) {}

  CycleInfo refine(cplx guess, int period) const {
    if (period < 1) throw Error(ErrorCode::NoConvergence, "period must be positive");
    cplx z = guess;
    bool done = false;
    for (int it = 0; it < 200 && !done; ++it) {
      cplx end;
      cplx d;
      if (!walk(z, period, end, d)) throw Error(ErrorCode::NoConvergence, "cycle refinement hit a pole");
      const cplx f = end - z;
      if (std::abs(f) < tol(z)) {
        done = true;
        break;
      }
      const cplx df = d - 1.0;
      if (std::abs(df) < 1e-14) throw Error(ErrorCode::DegenerateDerivative, "return map has multiplier 1");
      z -= f / df;
      if (!is_finite(z)) throw Error(ErrorCode::NoConvergence, "cycle refinement diverged");
    }
    if (!done) throw Error(ErrorCode::NoConvergence, "cycle refinement did not reach the residual bound");

    int minimal = period;
    for (int d = 1; d < period; ++d) {
      if (period % d != 0) continue;
      cplx end;
      cplx ignored;
      if (walk(z, d, end, ignored) && std::abs(end - z) < tol(z)) {
        minimal = d;
        break;
      }
    }
    cplx end;
    cplx mult;
    walk(z, minimal, end, mult);
    return {minimal, z, mult};
  }

 private:
  double tol(cplx z) const { return s_.refine_tol * std::max(1.0, std::abs(z)); }

  // Follows `n` steps from z; `end` receives the n-th iterate and `d` the
  // product of derivatives along the way.
  bool walk(cplx z, int n, cplx& end, cplx& d) const {
    d = 1.0;
    for (int i = 0; i < n; ++i) {
      const SpherePoint next = step_(z);
      if (next.is_infinity()) return false;
      d *= deriv_(z);
      z = next.value();
    }
    end = z;
    return true;
  }

  Step step_;
  Deriv deriv_;
  IterationSettings s_;
};

}  // namespace tandel::detail
