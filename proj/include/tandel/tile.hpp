#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tandel/viewport.hpp"

namespace tandel {

enum class FateCode : std::uint8_t { Escaped = 0, Cycle = 1, PoleHit = 2, Undecided = 3 };

/// Per-pixel render output. `value` is the escape step for Escaped/PoleHit/
/// Undecided pixels and the cycle period for Cycle pixels; `aux` holds
/// |multiplier| when known.
struct TileGrid {
  Viewport viewport;
  std::vector<std::uint8_t> fate;
  std::vector<std::uint32_t> value;
  std::vector<float> aux;

  explicit TileGrid(const Viewport& vp = {})
      : viewport(vp), fate(vp.size(), 0), value(vp.size(), 0), aux(vp.size(), 0.0f) {}

  std::size_t index(std::uint32_t i, std::uint32_t j) const { return static_cast<std::size_t>(j) * viewport.px + i; }

  friend bool operator==(const TileGrid& a, const TileGrid& b);
};

namespace tile_format {
inline constexpr std::uint8_t kMagic[4] = {0x54, 0x4E, 0x44, 0x4C};  // "TNDL"
inline constexpr std::uint16_t kVersion = 1;
inline constexpr std::size_t kHeaderBytes = 32;
inline constexpr std::size_t kRecordBytes = 9;
}  // namespace tile_format

/// Little-endian: magic, version u16, reserved u16, px u32, py u32,
/// center_re f64, center_im f64, then px*py records {fate u8, value u32,
/// aux f32}, row-major from row 0.
std::vector<std::uint8_t> encode_tile(const TileGrid& t);

/// Inverse of encode_tile. The format carries no width, so the decoded
/// viewport has width 1 unless `width` is supplied. Throws Error{MalformedTile}.
TileGrid decode_tile(std::span<const std::uint8_t> bytes, double width = 1.0);

}  // namespace tandel
