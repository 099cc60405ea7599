#pragma once

#include <vector>

#include "tandel/orbit_engine.hpp"

namespace tandel {

struct Membership {
  enum class Kind { InT, NotInT };

  Kind kind = Kind::InT;
  /// InT only: the orbit was still undecided after max_iter.
  bool tentative = false;
  /// NotInT only: step at which the orbit of 1/alpha entered the trap disk.
  long escape_step = 0;

  bool in_set() const { return kind == Kind::InT; }
};

struct ParamReport {
  cplx alpha;
  Membership membership;
  OrbitFate fate;
  std::optional<CycleInfo> cycle;
  cplx symmetry_residual;
  /// The four poles closest to the free value 1/alpha, nearest first.
  std::vector<cplx> nearest_poles;
};

struct Box {
  double re_min, re_max, im_min, im_max;
  bool contains(cplx z) const {
    return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
  }
};

/// Classifies the orbit of the free value 1/alpha. Pole hits count as members.
Membership tandelbrot_membership(cplx alpha, const IterationSettings& s);

/// Parameter alpha near `guess` with T_alpha^n(1/alpha) = infinity, i.e. the
/// (n-1)-st iterate of 1/alpha lands on a pole.
cplx solve_virtual_cycle(int n, cplx guess, const IterationSettings& s);

/// Roots of symmetry_residual inside `box`, each polished to |residual| < 1e-12.
std::vector<cplx> find_symmetry_parameters(const Box& box);

/// Real parameter where the attracting fixed point continued from
/// alpha = -0.001 turns neutral (multiplier 1, a saddle-node).
double main_component_left_endpoint(double tol);

/// Multiplier of the attracting cycle absorbing 1/alpha.
/// Throws Error{NotHyperbolic} when 1/alpha is not attracted to a cycle.
cplx multiplier_map(cplx alpha, const IterationSettings& s);

ParamReport analyze_parameter(cplx alpha, const IterationSettings& s);

}  // namespace tandel
