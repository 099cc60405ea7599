#pragma once

#include <cstdint>

#include "tandel/sphere.hpp"

namespace tandel {

/// A rectangular window of the complex plane sampled at pixel centers.
/// Pixel (i, j) sits at
///   center + ((i+0.5)/px - 0.5) width + i ((j+0.5)/py - 0.5) height,
/// with row j = 0 stored first.
struct Viewport {
  cplx center;
  double width = 1.0;
  std::uint32_t px = 1;
  std::uint32_t py = 1;

  double height() const { return width * static_cast<double>(py) / static_cast<double>(px); }

  cplx pixel(std::uint32_t i, std::uint32_t j) const {
    const double x = ((i + 0.5) / px - 0.5) * width;
    const double y = ((j + 0.5) / py - 0.5) * height();
    return center + cplx(x, y);
  }

  std::size_t size() const { return static_cast<std::size_t>(px) * py; }
};

}  // namespace tandel
