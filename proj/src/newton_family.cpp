#include "tandel/newton_family.hpp"

#include <numbers>

#include "tandel/error.hpp"
#include "tandel/orbit_core.hpp"

namespace tandel {

namespace {

constexpr int kStagnationSteps = 5;
constexpr double kStagnationTol = 1e-10;
constexpr double kRootTol = 1e-9;

// Log(a) + z, so that a e^z = exp(log_term).
cplx log_term(const NewtonParam& p, cplx z) { return std::log(p.a()) + z; }

auto newton_refiner(const NewtonParam& p, const IterationSettings& s) {
  auto step = [p](cplx z) { return eval_newton(p, z).value; };
  auto deriv = [p](cplx z) { return eval_newton_derivative(p, z); };
  return detail::CycleRefiner<decltype(step), decltype(deriv)>(step, deriv, s);
}

}  // namespace

NewtonParam::NewtonParam(cplx a) : a_(a) {
  if (a == cplx(0.0, 0.0)) throw Error(ErrorCode::AZero, "a = 0 gives the identity Newton map");
}

std::string_view to_string(NewtonFate::Kind kind) {
  switch (kind) {
    case NewtonFate::Kind::ConvergedToRoot: return "ConvergedToRoot";
    case NewtonFate::Kind::AttractingCycle: return "AttractingCycle";
    case NewtonFate::Kind::PoleHit: return "PoleHit";
    case NewtonFate::Kind::Undecided: return "Undecided";
  }
  return "Unknown";
}

cplx newton_target(const NewtonParam& p, cplx z) { return z + p.a() * std::exp(z); }

EvalOutcome eval_newton(const NewtonParam& p, cplx z) {
  const cplx s = log_term(p, z);
  if (s.real() < -limits::kExpThreshold) return {SpherePoint::finite(0.0), Clamp::UnderflowToAsymptote};
  if (s.real() > limits::kExpThreshold) return {SpherePoint::finite(z - 1.0), Clamp::OverflowToShift};
  const cplx e = std::exp(s);
  const cplx den = 1.0 + e;
  const cplx v = e * (z - 1.0) / den;
  if (den == cplx(0.0, 0.0) || !is_finite(v) || std::abs(v) > limits::kPoleCutoff)
    return {SpherePoint::infinity(), Clamp::PoleOverflowToInfinity};
  return {SpherePoint::finite(v), Clamp::None};
}

cplx eval_newton_derivative(const NewtonParam& p, cplx z) {
  if (eval_newton(p, z).value.is_infinity()) throw Error(ErrorCode::PoleInput, "Newton derivative at a pole");
  const cplx s = log_term(p, z);
  if (s.real() < -limits::kExpThreshold) return 0.0;
  if (s.real() > limits::kExpThreshold) return 1.0;
  const cplx e = std::exp(s);
  const cplx den = 1.0 + e;
  return (z + e) * e / (den * den);
}

cplx newton_pole(const NewtonParam& p, long k) {
  return std::log(-1.0 / p.a()) + cplx(0.0, 2.0 * std::numbers::pi * static_cast<double>(k));
}

NewtonFate classify_newton_orbit(const NewtonParam& p, const IterationSettings& s) {
  return classify_newton_orbit_from(p, 0.0, s);
}

NewtonFate classify_newton_orbit_from(const NewtonParam& p, cplx z0, const IterationSettings& s) {
  if (!is_finite(z0)) throw Error(ErrorCode::InvalidSeed, "seed must be finite");
  const auto refiner = newton_refiner(p, s);
  auto step = [&p](cplx z) { return eval_newton(p, z).value; };

  cplx prev = z0;
  int still = 0;
  auto converged = [&](cplx z, long n) {
    if (n > 0) still = std::abs(z - prev) < kStagnationTol ? still + 1 : 0;
    prev = z;
    return still >= kStagnationSteps && std::abs(newton_target(p, z)) < kRootTol;
  };
  // Roots are superattracting fixed points; leave them to the stagnation test.
  auto confirm = [&](cplx z, int period) -> std::optional<CycleInfo> {
    try {
      CycleInfo info = refiner.refine(z, period);
      if (info.period == 1 && std::abs(newton_target(p, info.representative)) < kRootTol) return std::nullopt;
      if (std::abs(info.multiplier) < 1.0) return info;
    } catch (const Error&) {
    }
    return std::nullopt;
  };

  const detail::RawOrbit raw = detail::run_orbit(step, converged, confirm, z0, s);
  NewtonFate fate;
  fate.steps = raw.steps;
  switch (raw.kind) {
    case detail::RawKind::Absorbed:
      fate.kind = NewtonFate::Kind::ConvergedToRoot;
      fate.root = raw.point;
      break;
    case detail::RawKind::Cycle:
      fate.kind = NewtonFate::Kind::AttractingCycle;
      fate.cycle = raw.cycle;
      break;
    case detail::RawKind::Pole: fate.kind = NewtonFate::Kind::PoleHit; break;
    case detail::RawKind::Undecided: fate.kind = NewtonFate::Kind::Undecided; break;
  }
  return fate;
}

CycleInfo refine_newton_cycle(const NewtonParam& p, cplx guess, int period, const IterationSettings& s) {
  return newton_refiner(p, s).refine(guess, period);
}

}  // namespace tandel
