#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support.hpp"
#include "tandel/error.hpp"
#include "tandel/model_family.hpp"

using namespace tandel;
using testing::random_in_disk;

namespace {
cplx val(cplx alpha, cplx z) { return eval(TangentParam(alpha), z).value.value(); }
}  // namespace

TEST_CASE("eval examples") {
  CHECK(val({0.3, 0.1}, 0.0) == cplx(0.0, 0.0));
  // oracle: 1 - e^{-1}
  CHECK(std::abs(val(0.0, 8.0) - 0.63212055882855767840) < 1e-15);
  CHECK(std::abs(val(-1.0, 8.0 * std::atanh(0.5)) - 0.5) < 1e-14);
  for (double x : {-3.0, -0.5, 0.7, 4.0}) CHECK(std::abs(val(-1.0, x) - std::tanh(x / 8.0)) < 1e-14);
}

TEST_CASE("pole input evaluates to infinity") {
  const TangentParam p(0.2);
  const cplx z = pole(p, 0);
  CHECK(std::abs(z - cplx(-16.094379124341003746, 0.0)) < 1e-12);
  // independent denominator check
  CHECK(std::abs(0.2 * std::exp((0.2 - 1.0) * z / 8.0) - 1.0) < 1e-10);
  const EvalOutcome out = eval(p, z);
  CHECK(out.value.is_infinity());
  CHECK(out.clamp == Clamp::PoleOverflowToInfinity);
  CHECK_THROWS_AS(eval_derivative(p, z), Error);
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(TangentParam(1.0), Error);
  try {
    TangentParam p(1.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AlphaIsOne);
  }
  CHECK_THROWS_AS(eval(TangentParam(0.3), SpherePoint::infinity()), Error);
  CHECK_THROWS_AS(pole(TangentParam(0.0), 0), Error);
  CHECK_THROWS_AS(TangentParam(0.0).free_value(), Error);
  CHECK_THROWS_AS(special_fixed_point(TangentParam(0.0)), Error);
}

TEST_CASE("derivative") {
  CHECK(std::abs(eval_derivative(TangentParam(-1.0), 0.0) - 0.125) < 1e-15);
  const TangentParam p({0.3, 0.2});
  const cplx z(1.5, -0.4);
  const double h = 1e-6;
  const cplx fd = (val(p.alpha(), z + h) - val(p.alpha(), z - h)) / (2.0 * h);
  const cplx d = eval_derivative(p, z);
  CHECK(std::abs(fd - d) / std::abs(d) < 1e-6);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const cplx a = random_in_disk(rng, 0.99);
    const cplx w = random_in_disk(rng, 10.0);
    const TangentParam q(a);
    if (std::abs(pole_residual(q, w)) < 1e-2) continue;
    const cplx fdi = (val(a, w + h) - val(a, w - h)) / (2.0 * h);
    const cplx di = eval_derivative(q, w);
    CHECK(std::abs(fdi - di) / std::max(1e-3, std::abs(di)) < 1e-6);
  }
}

TEST_CASE("parameter derivative matches finite differences") {
  const cplx a(-0.02, 0.01);
  const cplx z(-30.0, 5.0);
  const double h = 1e-9;
  const cplx fd = (val(a + h, z) - val(a - h, z)) / (2.0 * h);
  const cplx d = eval_param_derivative(TangentParam(a), z);
  CHECK(std::abs(fd - d) / std::abs(d) < 1e-5);
}

TEST_CASE("normalization at 0") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const TangentParam p(random_in_disk(rng, 3.0));
    CHECK(std::abs(val(p.alpha(), 0.0)) < 1e-12);
    CHECK(std::abs(eval_derivative(p, 0.0) - 0.125) < 1e-12);
  }
}

TEST_CASE("pole formula") {
  const TangentParam p(0.2);
  CHECK(std::abs(pole(p, 0) - 8.0 * (-std::log(0.2)) / (0.2 - 1.0)) < 1e-12);
  const cplx gap = 16.0 * std::numbers::pi * cplx(0, 1) / (0.2 - 1.0);
  CHECK(std::abs(pole(p, 1) - pole(p, 0) - gap) < 1e-12);
  CHECK(std::abs(pole(TangentParam({-0.021, 0.009}), 0)) > 2.0);

  for (double re = -0.45; re < 0.5; re += 0.1)
    for (double im = -0.45; im < 0.5; im += 0.1) {
      const cplx a(re, im);
      if (std::abs(a) >= 0.5) continue;
      const TangentParam q(a);
      for (long k = -50; k <= 50; ++k) {
        const cplx pk = pole(q, k);
        CHECK(std::abs(a * std::exp((a - 1.0) * pk / 8.0) - 1.0) < 1e-10);
        CHECK(nearest_pole_index(q, pk) == k);
      }
    }
}

TEST_CASE("special fixed point and symmetry residual") {
  CHECK(special_fixed_point(TangentParam(-1.0)) == cplx(0.0, 0.0));
  CHECK(std::abs(special_fixed_point(TangentParam(2.0)) - 1.5) < 1e-15);

  const TangentParam s(-0.01484108);
  const cplx z = special_fixed_point(s);
  CHECK(std::abs(val(s.alpha(), z) - z) < 1e-4);
  CHECK(std::abs(eval_derivative(s, z) - 0.125) < 1e-4);
  CHECK(std::abs(symmetry_residual(s)) < 1e-4);
  CHECK(std::abs(symmetry_residual(TangentParam({-0.00801734, 0.00675639}))) < 1e-4);
  CHECK(std::abs(symmetry_residual(TangentParam(0.3))) > 0.1);
  // oracle roots (40-digit solve)
  CHECK(std::abs(symmetry_residual(TangentParam(-0.0148410799067359392))) < 1e-12);
  CHECK(std::abs(symmetry_residual(TangentParam({-0.00801733810271441077, 0.00675639114589819934}))) < 1e-12);
}

TEST_CASE("involution transport") {
  {
    const auto [q, w] = involution_transport(TangentParam(-1.0), 0.7);
    CHECK(q.alpha() == cplx(-1.0, 0.0));
    CHECK(w == cplx(-0.7, 0.0));
    CHECK(std::abs(val(-1.0, -0.7) + val(-1.0, 0.7)) < 1e-15);
  }
  {
    const TangentParam p(0.4);
    const auto [q, w] = involution_transport(p, {2.0, 1.0});
    CHECK(std::abs(q.alpha() - 2.5) < 1e-15);
    CHECK(std::abs(w - cplx(0.8, 0.4)) < 1e-15);
    const cplx lhs = 0.4 * val(0.4, {2.0, 1.0});
    const cplx rhs = eval(q, w).value.value();
    CHECK(std::abs(lhs - rhs) < 1e-10);
    CHECK(std::abs(lhs - cplx(0.08772727249739894, 0.03583749790779519)) < 1e-14);
    // asymptotic values {1, 1/alpha} scale to {alpha, 1}, those of T_{1/alpha}
    CHECK(std::abs(0.4 * p.free_value() - 1.0) < 1e-15);
    CHECK(std::abs(0.4 * 1.0 - q.free_value()) < 1e-15);
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const cplx a = testing::random_in_annulus(rng, 0.05, 0.999);
    const cplx z = random_in_disk(rng, 20.0);
    const TangentParam p(a);
    if (std::abs(pole_residual(p, z)) < 1e-6) continue;
    const auto [q, w] = involution_transport(p, z);
    const cplx rhs = eval(q, w).value.value();
    CHECK(std::abs(a * val(a, z) - rhs) < 1e-9 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("trap disk maps into the unit disk") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const cplx a = random_in_disk(rng, 0.999);
    const cplx z = random_in_disk(rng, 2.0);
    REQUIRE(std::abs(val(a, z)) < 1.0);
  }
}

TEST_CASE("clamps reach the analytic limits monotonically") {
  const cplx a(0.3, 0.2);
  const TangentParam p(a);
  // (a-1)z/8 has negative real part along z = +x: value tends to 1.
  double prev = 1e300;
  for (double x = 100.0; x < 1e5; x *= 1.5) {
    const EvalOutcome out = eval(p, x);
    const double d = std::abs(out.value.value() - 1.0);
    CHECK(d <= prev + 1e-15);
    prev = d;
    if (std::real((a - 1.0) * x / 8.0) < -709.0) {
      CHECK(out.clamp == Clamp::UnderflowToOne);
      CHECK(out.value.value() == cplx(1.0, 0.0));
    }
  }
  prev = 1e300;
  for (double x = -100.0; x > -1e5; x *= 1.5) {
    const EvalOutcome out = eval(p, x);
    const double d = std::abs(out.value.value() - 1.0 / a);
    CHECK(d <= prev + 1e-15);
    prev = d;
    if (std::real((a - 1.0) * x / 8.0) > 709.0) CHECK(out.clamp == Clamp::OverflowToRecipAlpha);
  }
  // alpha = 0: the overflow limit 1/alpha is Infinity.
  CHECK(eval(TangentParam(0.0), -1e5).value.is_infinity());
}

TEST_CASE("finite outputs are finite") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 5000; ++i) {
    const cplx a = random_in_disk(rng, 2.0);
    if (a == cplx(1.0, 0.0)) continue;
    const cplx z = random_in_disk(rng, 1e4);
    const EvalOutcome out = eval(TangentParam(a), z);
    if (out.value.is_finite()) {
      CHECK(is_finite(out.value.value()));
      CHECK(std::abs(out.value.value()) <= limits::kPoleCutoff);
    }
  }
}

TEST_CASE("chordal distance") {
  CHECK(chordal_distance(SpherePoint::infinity(), SpherePoint::infinity()) == 0.0);
  CHECK(std::abs(chordal_distance(SpherePoint::finite(0.0), SpherePoint::infinity()) - 2.0) < 1e-15);
  CHECK(std::abs(chordal_distance(SpherePoint::finite(1.0), SpherePoint::finite(-1.0)) - 2.0) < 1e-15);
}
