#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support.hpp"
#include "tandel/error.hpp"
#include "tandel/param_analysis.hpp"

using namespace tandel;

namespace {
const cplx kThreeCycle(-0.021, 0.009);
// real root of the symmetry equation and its complex companion (40-digit oracle)
const cplx kSym1(-0.0148410799067359392213840335292, 0.0);
const cplx kSym2(-0.00801733810271441076979300278779, 0.00675639114589819934284129641896);
}  // namespace

TEST_CASE("membership examples") {
  const auto s = IterationSettings::rendering();
  CHECK(tandelbrot_membership(kThreeCycle, s).in_set());
  CHECK_FALSE(tandelbrot_membership(kThreeCycle, s).tentative);
  const Membership out = tandelbrot_membership(0.8, s);
  CHECK(out.kind == Membership::Kind::NotInT);
  CHECK(out.escape_step == 0);

  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> th(0.0, 2.0 * std::numbers::pi);
  for (int i = 0; i < 200; ++i) {
    (void)tandelbrot_membership(std::polar(0.49, th(rng)), s);
    CHECK_FALSE(tandelbrot_membership(testing::random_in_annulus(rng, 0.5, 0.999), s).in_set());
  }
}

TEST_CASE("virtual cycle n = 1 matches the Lambert W closed form") {
  // 1/alpha is a pole iff alpha = 1 / (8 W_{-1}(e^{1/8}/8)); 40-digit oracle
  const cplx oracle(-0.01568040790668519016, 0.01711366687291876366);
  const auto s = IterationSettings::analysis();
  const cplx a = solve_virtual_cycle(1, {-0.015, 0.015}, s);
  CHECK(std::abs(a - oracle) < 1e-12);
  const TangentParam p(a);
  CHECK(std::abs(pole_residual(p, p.free_value())) < 1e-9);
  const SpherePoint r = iterate(p, p.free_value(), 1);
  CHECK((r.is_infinity() || std::abs(r.value()) > s.pole_cutoff));
}

TEST_CASE("virtual cycle n = 2 lies on the boundary") {
  const auto s = IterationSettings::rendering();
  const cplx a = solve_virtual_cycle(2, {-0.03, 0.03}, s);
  CHECK(std::abs(a - cplx(-0.0222735136584, 0.0101186486533)) < 1e-10);
  const SpherePoint r = iterate(TangentParam(a), 1.0 / a, 2);
  CHECK((r.is_infinity() || std::abs(r.value()) > s.pole_cutoff));

  bool in = false, out = false;
  for (int k = 0; k < 64; ++k) {
    const cplx b = a + std::polar(5e-3, 2.0 * std::numbers::pi * k / 64.0);
    (tandelbrot_membership(b, s).in_set() ? in : out) = true;
  }
  CHECK(in);
  CHECK(out);
}

TEST_CASE("virtual cycle errors") {
  const auto s = IterationSettings::rendering();
  CHECK_THROWS_AS(solve_virtual_cycle(0, {-0.02, 0.01}, s), Error);
  CHECK_THROWS_AS(solve_virtual_cycle(1, 1.0, s), Error);
}

TEST_CASE("symmetry parameters") {
  const auto r1 = find_symmetry_parameters({-0.02, -0.01, -0.001, 0.001});
  REQUIRE(r1.size() == 1);
  CHECK(std::abs(r1[0] - cplx(-0.01484108, 0.0)) < 1e-5);
  CHECK(std::abs(r1[0] - kSym1) < 1e-14);

  const auto r2 = find_symmetry_parameters({-0.0085, -0.0075, 0.0063, 0.0073});
  REQUIRE(r2.size() == 1);
  CHECK(std::abs(r2[0] - cplx(-0.00801734, 0.00675639)) < 1e-5);
  CHECK(std::abs(r2[0] - kSym2) < 1e-14);

  for (cplx z : find_symmetry_parameters({0.2, 0.3, 0.0, 0.1}))
    CHECK(std::abs(symmetry_residual(TangentParam(z))) < 1e-12);
}

TEST_CASE("left endpoint of the main component") {
  const double a0 = main_component_left_endpoint(1e-12);
  // 40-digit fold solve
  CHECK(std::abs(a0 - (-0.01897718395529261691638)) < 1e-10);

  // independent sign check by real continuation of the attracting fixed point
  const auto s = IterationSettings::analysis();
  const auto right = classify_orbit(TangentParam(a0 + 1e-4), 1.0 / (a0 + 1e-4), s);
  REQUIRE(right.kind == OrbitFate::Kind::AttractingCycle);
  CHECK(right.cycle->period == 1);
  CHECK(std::abs(right.cycle->representative.imag()) < 1e-9);
  const auto left = classify_orbit(TangentParam(a0 - 1e-4), 1.0 / (a0 - 1e-4), s);
  CHECK_FALSE((left.kind == OrbitFate::Kind::AttractingCycle && left.cycle->period == 1 &&
               std::abs(left.cycle->representative.imag()) < 1e-9));

  // neutral multiplier at the fold: x0 = -43.1455662897 (oracle)
  const TangentParam p(a0);
  CHECK(std::abs(std::abs(eval_derivative(p, -43.1455662897)) - 1.0) < 1e-6);
}

TEST_CASE("multiplier map") {
  const auto s = IterationSettings::analysis();
  const cplx r = multiplier_map(kThreeCycle, s);
  CHECK(std::abs(r) > 0.0);
  CHECK(std::abs(r) < 1.0);
  CHECK(std::abs(std::abs(r) - 0.2401755762000171) < 1e-9);
  const cplx r1 = multiplier_map(-0.001, s);
  CHECK(std::abs(r1.imag()) < 1e-15);
  CHECK(r1.real() > 0.0);
  CHECK(r1.real() < 1.0);
  try {
    multiplier_map(0.8, s);
    FAIL("expected NotHyperbolic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHyperbolic);
  }
}

TEST_CASE("analyze_parameter") {
  const auto s = IterationSettings::analysis();
  const ParamReport r = analyze_parameter(kThreeCycle, s);
  CHECK(r.membership.in_set());
  REQUIRE(r.cycle);
  CHECK(r.cycle->period == 3);
  CHECK(r.fate.kind == OrbitFate::Kind::AttractingCycle);
  REQUIRE(r.nearest_poles.size() == 4);
  const cplx v = 1.0 / kThreeCycle;
  for (std::size_t i = 1; i < r.nearest_poles.size(); ++i)
    CHECK(std::abs(r.nearest_poles[i - 1] - v) <= std::abs(r.nearest_poles[i] - v));

  const ParamReport o = analyze_parameter(0.8, s);
  CHECK_FALSE(o.membership.in_set());
  CHECK_FALSE(o.cycle);

  CHECK(std::abs(analyze_parameter(-0.01484108, s).symmetry_residual) < 1e-4);
}

TEST_CASE("membership agrees with capture under the involution") {
  const auto s = IterationSettings::rendering();
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    const cplx a = testing::random_in_disk(rng, 0.6);
    if (std::abs(a) < 1e-3) continue;
    const TangentParam p(a);
    const bool escaped = !tandelbrot_membership(a, s).in_set();
    // the same orbit seen through L(z) = alpha z is the orbit of 1 under T_{1/alpha}
    const auto [q, w] = involution_transport(p, p.free_value());
    CHECK(std::abs(w - 1.0) < 1e-15);
    SpherePoint z = SpherePoint::finite(p.free_value());
    bool converged = false;
    for (int k = 0; k < 5000 && z.is_finite(); ++k) {
      if (std::abs(z.value()) < 1e-8) {
        converged = true;
        break;
      }
      z = eval(p, z.value()).value;
    }
    CHECK(escaped == converged);
  }
}

TEST_CASE("raising max_iter never turns an escape into membership") {
  std::mt19937_64 rng(29);
  IterationSettings lo;
  lo.max_iter = 50;
  IterationSettings hi;
  hi.max_iter = 5000;
  for (int i = 0; i < 500; ++i) {
    const cplx a = testing::random_in_disk(rng, 0.5);
    if (std::abs(a) < 1e-4) continue;
    if (!tandelbrot_membership(a, lo).in_set()) CHECK_FALSE(tandelbrot_membership(a, hi).in_set());
  }
}
