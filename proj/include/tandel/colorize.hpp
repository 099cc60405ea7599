#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tandel/tile.hpp"

namespace tandel {

using Rgba = std::array<std::uint8_t, 4>;

struct PaletteSpec {
  Rgba inside{0, 0, 0, 255};
  Rgba marker{255, 40, 40, 255};
  /// Gradient stops from escape step 0 to the largest escape step.
  std::vector<Rgba> gradient{{255, 255, 255, 255}, {120, 170, 230, 255}, {20, 40, 120, 255}};
  /// Normalizing step; 0 means the largest escape step present in the grid.
  std::uint32_t max_step = 0;
};

struct Image {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> rgba;  ///< row-major, 4 bytes per pixel
};

Image colorize(const TileGrid& t, const PaletteSpec& palette = {});

std::vector<std::uint8_t> encode_png(const Image& img);
std::vector<std::uint8_t> encode_ppm(const Image& img);

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);

}  // namespace tandel
