#include "tandel/model_family.hpp"

#include <numbers>

#include "tandel/error.hpp"

namespace tandel {

namespace {

constexpr cplx kI{0.0, 1.0};

// exp(z) - 1 without cancellation for small |z|.
cplx expm1c(cplx z) {
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

cplx exponent(const TangentParam& p, cplx z) { return (p.alpha() - 1.0) * z / 8.0; }

SpherePoint promote(cplx v) {
  if (!is_finite(v) || std::abs(v) > limits::kPoleCutoff) return SpherePoint::infinity();
  return SpherePoint::finite(v);
}

}  // namespace

TangentParam::TangentParam(cplx alpha) : alpha_(alpha) {
  if (alpha == cplx(1.0, 0.0)) throw Error(ErrorCode::AlphaIsOne, "the family is undefined at alpha = 1");
}

cplx TangentParam::free_value() const {
  if (alpha_ == cplx(0.0, 0.0)) throw Error(ErrorCode::AlphaZero, "1/alpha is undefined at alpha = 0");
  return 1.0 / alpha_;
}

EvalOutcome eval(const TangentParam& p, const SpherePoint& z) {
  if (z.is_infinity()) throw Error(ErrorCode::EssentialSingularityInput, "infinity is an essential singularity");
  return eval(p, z.value());
}

EvalOutcome eval(const TangentParam& p, cplx z) {
  const cplx a = p.alpha();
  const cplx e = exponent(p, z);
  if (e.real() < -limits::kExpThreshold) return {SpherePoint::finite(1.0), Clamp::UnderflowToOne};
  if (e.real() > limits::kExpThreshold) {
    // T_0 is entire; its limit in this direction is infinity.
    if (a == cplx(0.0, 0.0)) return {SpherePoint::infinity(), Clamp::PoleOverflowToInfinity};
    return {SpherePoint::finite(1.0 / a), Clamp::OverflowToRecipAlpha};
  }

  cplx value;
  if (e.real() <= 0.0) {
    const cplx wm1 = expm1c(e);
    const cplx den = a * wm1 + (a - 1.0);
    value = wm1 / den;
  } else {
    // Divide through by w to keep the arithmetic bounded.
    const cplx u = std::exp(-e);
    value = (1.0 - u) / (a - u);
  }
  SpherePoint out = promote(value);
  if (out.is_infinity()) return {out, Clamp::PoleOverflowToInfinity};
  return {out, Clamp::None};
}

cplx eval_derivative(const TangentParam& p, cplx z) {
  if (eval(p, z).value.is_infinity()) throw Error(ErrorCode::PoleInput, "derivative requested at a pole");
  const cplx a = p.alpha();
  const cplx e = exponent(p, z);
  const cplx am1 = a - 1.0;
  if (e.real() < -limits::kExpThreshold) return 0.0;
  if (e.real() <= 0.0) {
    const cplx w = std::exp(e);
    const cplx den = a * w - 1.0;
    return am1 * am1 * w / (8.0 * den * den);
  }
  if (e.real() > limits::kExpThreshold) return 0.0;
  const cplx u = std::exp(-e);
  const cplx den = a - u;
  return am1 * am1 * u / (8.0 * den * den);
}

cplx eval_param_derivative(const TangentParam& p, cplx z) {
  if (eval(p, z).value.is_infinity()) throw Error(ErrorCode::PoleInput, "parameter derivative requested at a pole");
  const cplx a = p.alpha();
  const cplx e = exponent(p, z);
  if (e.real() < -limits::kExpThreshold) return 0.0;
  if (e.real() <= 0.0) {
    const cplx w = std::exp(e);
    const cplx den = a * w - 1.0;
    return w * (e - w + 1.0) / (den * den);
  }
  if (e.real() > limits::kExpThreshold) return -1.0 / (a * a);
  const cplx u = std::exp(-e);
  const cplx den = a - u;
  return (u * (e + 1.0) - 1.0) / (den * den);
}

cplx pole(const TangentParam& p, long k) {
  const cplx a = p.alpha();
  if (a == cplx(0.0, 0.0)) throw Error(ErrorCode::NoPoles, "T_0 is entire");
  return 8.0 * (-std::log(a) + 2.0 * std::numbers::pi * kI * static_cast<double>(k)) / (a - 1.0);
}

long nearest_pole_index(const TangentParam& p, cplx z) {
  const cplx a = p.alpha();
  if (a == cplx(0.0, 0.0)) throw Error(ErrorCode::NoPoles, "T_0 is entire");
  const cplx s = exponent(p, z) + std::log(a);
  return std::lround(s.imag() / (2.0 * std::numbers::pi));
}

cplx pole_residual(const TangentParam& p, cplx z) {
  const cplx a = p.alpha();
  if (a == cplx(0.0, 0.0)) return -1.0;
  // a*w - 1 = expm1(Log a + e); accurate near a pole.
  return expm1c(std::log(a) + exponent(p, z));
}

cplx special_fixed_point(const TangentParam& p) {
  if (p.alpha() == cplx(0.0, 0.0)) throw Error(ErrorCode::AlphaZero, "z_alpha = 1 + 1/alpha is undefined");
  return 1.0 + 1.0 / p.alpha();
}

cplx symmetry_residual(const TangentParam& p) {
  const cplx a = p.alpha();
  if (a == cplx(0.0, 0.0)) throw Error(ErrorCode::AlphaZero, "symmetry relation is undefined at alpha = 0");
  return std::exp(2.0 * std::log(a) + (a * a - 1.0) / (8.0 * a)) - 1.0;
}

std::pair<TangentParam, cplx> involution_transport(const TangentParam& p, cplx z) {
  const cplx a = p.alpha();
  if (a == cplx(0.0, 0.0)) throw Error(ErrorCode::AlphaZero, "the involution is undefined at alpha = 0");
  return {TangentParam(1.0 / a), a * z};
}

}  // namespace tandel
