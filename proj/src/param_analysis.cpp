#include "tandel/param_analysis.hpp"

#include <algorithm>
#include <numbers>

#include "tandel/error.hpp"

namespace tandel {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_parameter(cplx alpha) {
  if (alpha == cplx(1.0, 0.0)) throw Error(ErrorCode::AlphaIsOne, "alpha = 1 is excluded");
  if (alpha == cplx(0.0, 0.0)) throw Error(ErrorCode::AlphaZero, "the free value 1/alpha is undefined");
}

// Value and alpha-derivative of the pole residual at the (n-1)-st iterate of
// 1/alpha. `clamped` reports whether the chain rule passed through a clamp.
struct VirtualCycleObjective {
  cplx residual;
  cplx derivative;
  cplx last_iterate;
  bool clamped = false;
};

VirtualCycleObjective virtual_cycle_objective(cplx alpha, int n) {
  const TangentParam p(alpha);
  cplx z = 1.0 / alpha;
  cplx dz = -1.0 / (alpha * alpha);
  bool clamped = false;
  for (int j = 0; j + 1 < n; ++j) {
    const EvalOutcome out = eval(p, z);
    if (out.value.is_infinity())
      throw Error(ErrorCode::DerivativeThroughPole, "an intermediate iterate of 1/alpha is a pole");
    if (out.clamp != Clamp::None) clamped = true;
    dz = eval_param_derivative(p, z) + eval_derivative(p, z) * dz;
    z = out.value.value();
  }
  const cplx r = pole_residual(p, z);
  const cplx d = (r + 1.0) * (1.0 / alpha + z / 8.0 + (alpha - 1.0) * dz / 8.0);
  return {r, d, z, clamped};
}

double pole_distance(cplx alpha, cplx z) {
  const TangentParam p(alpha);
  return std::abs(z - pole(p, nearest_pole_index(p, z)));
}

// 2 Log(alpha) + (alpha^2 - 1)/(8 alpha); symmetric parameters are where
// this lies in 2 pi i Z.
cplx symmetry_log(cplx a) { return 2.0 * std::log(a) + (a * a - 1.0) / (8.0 * a); }
cplx symmetry_log_derivative(cplx a) { return 2.0 / a + (1.0 + 1.0 / (a * a)) / 8.0; }

std::optional<double> real_fixed_point(double alpha, double x) {
  const TangentParam p{cplx(alpha, 0.0)};
  for (int it = 0; it < 100; ++it) {
    const EvalOutcome out = eval(p, cplx(x, 0.0));
    if (out.value.is_infinity()) return std::nullopt;
    const double f = out.value.value().real() - x;
    const double df = eval_derivative(p, cplx(x, 0.0)).real() - 1.0;
    if (df == 0.0) return std::nullopt;
    const double dx = f / df;
    x -= dx;
    if (!std::isfinite(x)) return std::nullopt;
    if (std::abs(dx) < 1e-14 * std::max(1.0, std::abs(x))) return x;
  }
  return std::nullopt;
}

}  // namespace

Membership tandelbrot_membership(cplx alpha, const IterationSettings& s) {
  require_parameter(alpha);
  const TangentParam p(alpha);
  const OrbitFate fate = classify_orbit(p, p.free_value(), s);
  switch (fate.kind) {
    case OrbitFate::Kind::CapturedByZero: return {Membership::Kind::NotInT, false, fate.steps};
    case OrbitFate::Kind::Undecided: return {Membership::Kind::InT, true, 0};
    case OrbitFate::Kind::AttractingCycle:
    case OrbitFate::Kind::PoleHit: break;
  }
  return {Membership::Kind::InT, false, 0};
}

cplx solve_virtual_cycle(int n, cplx guess, const IterationSettings& s) {
  if (n < 1) throw Error(ErrorCode::NoConvergence, "virtual cycle length must be positive");
  require_parameter(guess);

  cplx alpha = guess;
  cplx prev_alpha{};
  cplx prev_residual{};
  bool have_prev = false;
  int polish = 0;
  for (int it = 0; it < 200; ++it) {
    const VirtualCycleObjective obj = virtual_cycle_objective(alpha, n);
    const bool converged = pole_distance(alpha, obj.last_iterate) < 1e-9;
    if (converged && ++polish > 3) break;

    cplx step;
    if (!obj.clamped && std::abs(obj.derivative) > 0.0) {
      step = obj.residual / obj.derivative;
    } else if (have_prev && obj.residual != prev_residual) {
      step = obj.residual * (alpha - prev_alpha) / (obj.residual - prev_residual);
    } else {
      step = 1e-6 * std::abs(alpha);
    }
    // Keep the iterate away from the parameter singularity at 0.
    const double cap = 0.25 * std::abs(alpha);
    if (std::abs(step) > cap) step *= cap / std::abs(step);

    prev_alpha = alpha;
    prev_residual = obj.residual;
    have_prev = true;
    alpha -= step;
    if (!is_finite(alpha) || alpha == cplx(0.0, 0.0) || alpha == cplx(1.0, 0.0))
      throw Error(ErrorCode::NoConvergence, "parameter iteration left the domain");
    if (converged && std::abs(step) < 1e-17) break;
  }

  const VirtualCycleObjective obj = virtual_cycle_objective(alpha, n);
  if (pole_distance(alpha, obj.last_iterate) >= 1e-9)
    throw Error(ErrorCode::NoConvergence, "virtual cycle solver did not converge");
  // An orbit that touches the trap disk converges to 0 and cannot reach a
  // pole, so such a root belongs to a different branch of the equation.
  const TangentParam p(alpha);
  cplx z = 1.0 / alpha;
  for (int j = 0; j < n; ++j) {
    if (std::abs(z) <= s.trap_radius)
      throw Error(ErrorCode::NoConvergence, "virtual cycle candidate is captured by the trap disk");
    if (j + 1 < n) z = eval(p, z).value.value();
  }
  return alpha;
}

std::vector<cplx> find_symmetry_parameters(const Box& box) {
  constexpr int kSeeds = 24;
  std::vector<cplx> roots;
  for (int i = 0; i < kSeeds; ++i) {
    for (int j = 0; j < kSeeds; ++j) {
      cplx a(box.re_min + (i + 0.5) / kSeeds * (box.re_max - box.re_min),
             box.im_min + (j + 0.5) / kSeeds * (box.im_max - box.im_min));
      if (a == cplx(0.0, 0.0) || a == cplx(1.0, 0.0)) continue;

      bool ok = false;
      for (int it = 0; it < 60; ++it) {
        const cplx g = symmetry_log(a);
        const double k = std::round(g.imag() / kTwoPi);
        const cplx target = g - cplx(0.0, kTwoPi * k);
        const cplx step = target / symmetry_log_derivative(a);
        a -= step;
        if (!is_finite(a) || a == cplx(0.0, 0.0)) break;
        if (std::abs(step) < 1e-16 * std::abs(a)) {
          ok = true;
          break;
        }
      }
      if (!ok || !box.contains(a) || a == cplx(1.0, 0.0)) continue;
      if (std::abs(symmetry_residual(TangentParam(a))) >= 1e-12) continue;
      const bool seen = std::any_of(roots.begin(), roots.end(),
                                    [a](cplx r) { return std::abs(r - a) < 1e-10 * std::max(1.0, std::abs(a)); });
      if (!seen) roots.push_back(a);
    }
  }
  std::sort(roots.begin(), roots.end(), [](cplx x, cplx y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return roots;
}

double main_component_left_endpoint(double tol) {
  double alpha = -0.001;
  std::optional<double> x = real_fixed_point(alpha, 1.0 / alpha);
  auto attracting = [](double a, double fp) {
    return std::abs(eval_derivative(TangentParam(cplx(a, 0.0)), cplx(fp, 0.0))) < 1.0;
  };
  if (!x || *x >= 0.0 || !attracting(alpha, *x))
    throw Error(ErrorCode::ContinuationLost, "no attracting real fixed point at alpha = -0.001");

  double step = 1e-4;
  while (step > tol) {
    const double trial = alpha - step;
    const std::optional<double> next = real_fixed_point(trial, *x);
    if (next && *next < 0.0 && std::abs(*next - *x) < 1.0 + 0.5 * std::abs(*x) && attracting(trial, *next)) {
      alpha = trial;
      x = next;
    } else {
      step *= 0.5;
    }
  }

  // The bracket closes on a saddle-node; solve T(x) = x, T'(x) = 1 jointly.
  double a = alpha;
  double fx = *x;
  for (int it = 0; it < 50; ++it) {
    const TangentParam p{cplx(a, 0.0)};
    const cplx z(fx, 0.0);
    const double w = std::exp((a - 1.0) * fx / 8.0);
    const double den = a * w - 1.0;
    const double t1 = eval_derivative(p, z).real();
    const double f1 = eval(p, z).value.value().real() - fx;
    const double f2 = t1 - 1.0;
    const double j11 = eval_param_derivative(p, z).real();
    const double j12 = t1 - 1.0;
    const double j21 = t1 * (2.0 / (a - 1.0) + fx / 8.0 - 2.0 * w * (1.0 + a * fx / 8.0) / den);
    const double j22 = t1 * (a - 1.0) / 8.0 * (1.0 - 2.0 * a * w / den);
    const double det = j11 * j22 - j12 * j21;
    if (det == 0.0 || !std::isfinite(det)) throw Error(ErrorCode::ContinuationLost, "singular fold system");
    const double da = (f1 * j22 - j12 * f2) / det;
    const double dx = (j11 * f2 - j21 * f1) / det;
    a -= da;
    fx -= dx;
    if (std::abs(da) < 1e-16 && std::abs(dx) < 1e-13 * std::abs(fx)) break;
  }
  if (!std::isfinite(a) || std::abs(a - alpha) > 1e-3)
    throw Error(ErrorCode::ContinuationLost, "fold polish left the continuation bracket");
  return a;
}

cplx multiplier_map(cplx alpha, const IterationSettings& s) {
  require_parameter(alpha);
  const TangentParam p(alpha);
  if (std::abs(alpha) >= 1.0) throw Error(ErrorCode::NotHyperbolic, "|alpha| >= 1 lies outside the set");
  const OrbitFate fate = classify_orbit(p, p.free_value(), s);
  if (fate.kind != OrbitFate::Kind::AttractingCycle)
    throw Error(ErrorCode::NotHyperbolic, "the free value is not attracted to a cycle");
  return fate.cycle->multiplier;
}

ParamReport analyze_parameter(cplx alpha, const IterationSettings& s) {
  require_parameter(alpha);
  const TangentParam p(alpha);
  ParamReport report;
  report.alpha = alpha;
  report.fate = classify_orbit(p, p.free_value(), s);
  switch (report.fate.kind) {
    case OrbitFate::Kind::CapturedByZero:
      report.membership = {Membership::Kind::NotInT, false, report.fate.steps};
      break;
    case OrbitFate::Kind::Undecided: report.membership = {Membership::Kind::InT, true, 0}; break;
    default: report.membership = {Membership::Kind::InT, false, 0}; break;
  }
  report.cycle = report.fate.cycle;
  report.symmetry_residual = symmetry_residual(p);

  const cplx v = p.free_value();
  const long k0 = nearest_pole_index(p, v);
  std::vector<cplx> poles;
  for (long k = k0 - 3; k <= k0 + 3; ++k) poles.push_back(pole(p, k));
  std::stable_sort(poles.begin(), poles.end(), [v](cplx x, cplx y) { return std::abs(x - v) < std::abs(y - v); });
  poles.resize(4);
  report.nearest_poles = std::move(poles);
  return report;
}

}  // namespace tandel
