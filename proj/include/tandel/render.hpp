#pragma once

#include <optional>
#include <variant>

#include "tandel/newton_family.hpp"
#include "tandel/orbit_engine.hpp"
#include "tandel/tile.hpp"

namespace tandel {

struct ParamFamily {
  enum class Kind { Tangent, Newton, AnMask };

  Kind kind = Kind::Tangent;
  // AnMask only.
  int n = 0;
  std::optional<int> k;
  std::optional<double> delta;

  static ParamFamily tangent() { return {}; }
  static ParamFamily newton() { return {Kind::Newton, 0, std::nullopt, std::nullopt}; }
  static ParamFamily an_mask(int n, std::optional<int> k = std::nullopt, std::optional<double> delta = std::nullopt) {
    return {Kind::AnMask, n, k, delta};
  }
};

using DynInstance = std::variant<TangentParam, NewtonParam>;

/// Worker count from TANDELBROT_THREADS, else the hardware concurrency.
unsigned default_workers();

/// One fate evaluation per pixel. Tangent pixels with |alpha| >= 1 or
/// alpha in {0, 1} and Newton pixels with a = 0 are marked Undecided.
/// Throws Error{ZeroPixelViewport}; AnMask also throws Error{GridOutsideHalfDisk}.
TileGrid render_parameter_plane(const ParamFamily& family, const Viewport& vp, const IterationSettings& s,
                                unsigned workers = default_workers());

/// Fate of every pixel's own orbit. A tangent instance needs |alpha| < 1.
TileGrid render_dynamical_plane(const DynInstance& instance, const Viewport& vp, const IterationSettings& s,
                                unsigned workers = default_workers());

}  // namespace tandel
