#include "tandel/orbit_engine.hpp"

#include "tandel/error.hpp"
#include "tandel/orbit_core.hpp"

namespace tandel {

namespace {

auto tangent_refiner(const TangentParam& p, const IterationSettings& s) {
  auto step = [p](cplx z) { return eval(p, z).value; };
  auto deriv = [p](cplx z) { return eval_derivative(p, z); };
  return detail::CycleRefiner<decltype(step), decltype(deriv)>(step, deriv, s);
}

}  // namespace

std::string_view to_string(OrbitFate::Kind kind) {
  switch (kind) {
    case OrbitFate::Kind::CapturedByZero: return "CapturedByZero";
    case OrbitFate::Kind::AttractingCycle: return "AttractingCycle";
    case OrbitFate::Kind::PoleHit: return "PoleHit";
    case OrbitFate::Kind::Undecided: return "Undecided";
  }
  return "Unknown";
}

OrbitFate classify_orbit(const TangentParam& p, cplx z0, const IterationSettings& s) {
  if (std::abs(p.alpha()) >= 1.0)
    throw Error(ErrorCode::ParamOutsideDisk, "orbit classification needs |alpha| < 1; transport with 1/alpha first");
  if (!is_finite(z0)) throw Error(ErrorCode::InvalidSeed, "seed must be finite");

  const auto refiner = tangent_refiner(p, s);
  auto step = [&p](cplx z) { return eval(p, z).value; };
  auto captured = [r = s.trap_radius](cplx z, long) { return std::abs(z) <= r; };
  auto confirm = [&refiner](cplx z, int period) -> std::optional<CycleInfo> {
    try {
      CycleInfo info = refiner.refine(z, period);
      if (std::abs(info.multiplier) < 1.0) return info;
    } catch (const Error&) {
    }
    return std::nullopt;
  };

  const detail::RawOrbit raw = detail::run_orbit(step, captured, confirm, z0, s);
  switch (raw.kind) {
    case detail::RawKind::Absorbed: return {OrbitFate::Kind::CapturedByZero, raw.steps, std::nullopt};
    case detail::RawKind::Cycle: return {OrbitFate::Kind::AttractingCycle, raw.steps, raw.cycle};
    case detail::RawKind::Pole: return {OrbitFate::Kind::PoleHit, raw.steps, std::nullopt};
    case detail::RawKind::Undecided: break;
  }
  return {OrbitFate::Kind::Undecided, raw.steps, std::nullopt};
}

CycleInfo refine_cycle(const TangentParam& p, cplx guess, int period, const IterationSettings& s) {
  return tangent_refiner(p, s).refine(guess, period);
}

SpherePoint iterate(const TangentParam& p, cplx z, long n) {
  SpherePoint cur = SpherePoint::finite(z);
  for (long i = 0; i < n && cur.is_finite(); ++i) cur = eval(p, cur.value()).value;
  return cur;
}

}  // namespace tandel
