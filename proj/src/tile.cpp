#include "tandel/tile.hpp"

#include <bit>
#include <cstring>

#include "tandel/error.hpp"

namespace tandel {

namespace {

template <class T>
void put(std::vector<std::uint8_t>& out, T v) {
  auto bits = std::bit_cast<std::conditional_t<sizeof(T) == 8, std::uint64_t,
                                               std::conditional_t<sizeof(T) == 4, std::uint32_t,
                                                                  std::conditional_t<sizeof(T) == 2, std::uint16_t,
                                                                                     std::uint8_t>>>>(v);
  for (std::size_t b = 0; b < sizeof(T); ++b) out.push_back(static_cast<std::uint8_t>(bits >> (8 * b)));
}

template <class T>
T get(std::span<const std::uint8_t> in, std::size_t& pos) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t,
                               std::conditional_t<sizeof(T) == 4, std::uint32_t,
                                                  std::conditional_t<sizeof(T) == 2, std::uint16_t, std::uint8_t>>>;
  U bits = 0;
  for (std::size_t b = 0; b < sizeof(T); ++b) bits |= static_cast<U>(static_cast<U>(in[pos + b]) << (8 * b));
  pos += sizeof(T);
  return std::bit_cast<T>(bits);
}

}  // namespace

bool operator==(const TileGrid& a, const TileGrid& b) {
  const auto& va = a.viewport;
  const auto& vb = b.viewport;
  return va.center == vb.center && va.width == vb.width && va.px == vb.px && va.py == vb.py && a.fate == b.fate &&
         a.value == b.value && std::memcmp(a.aux.data(), b.aux.data(), a.aux.size() * sizeof(float)) == 0 &&
         a.aux.size() == b.aux.size();
}

std::vector<std::uint8_t> encode_tile(const TileGrid& t) {
  std::vector<std::uint8_t> out;
  out.reserve(tile_format::kHeaderBytes + tile_format::kRecordBytes * t.fate.size());
  for (const std::uint8_t b : tile_format::kMagic) out.push_back(b);
  put<std::uint16_t>(out, tile_format::kVersion);
  put<std::uint16_t>(out, 0);
  put<std::uint32_t>(out, t.viewport.px);
  put<std::uint32_t>(out, t.viewport.py);
  put<double>(out, t.viewport.center.real());
  put<double>(out, t.viewport.center.imag());
  for (std::size_t i = 0; i < t.fate.size(); ++i) {
    put<std::uint8_t>(out, t.fate[i]);
    put<std::uint32_t>(out, t.value[i]);
    put<float>(out, t.aux[i]);
  }
  return out;
}

TileGrid decode_tile(std::span<const std::uint8_t> bytes, double width) {
  if (bytes.size() < tile_format::kHeaderBytes) throw Error(ErrorCode::MalformedTile, "truncated header");
  if (std::memcmp(bytes.data(), tile_format::kMagic, 4) != 0) throw Error(ErrorCode::MalformedTile, "bad magic");
  std::size_t pos = 4;
  const auto version = get<std::uint16_t>(bytes, pos);
  if (version != tile_format::kVersion) throw Error(ErrorCode::MalformedTile, "unsupported version");
  get<std::uint16_t>(bytes, pos);
  Viewport vp;
  vp.px = get<std::uint32_t>(bytes, pos);
  vp.py = get<std::uint32_t>(bytes, pos);
  const double re = get<double>(bytes, pos);
  const double im = get<double>(bytes, pos);
  vp.center = {re, im};
  vp.width = width;
  if (bytes.size() != tile_format::kHeaderBytes + tile_format::kRecordBytes * vp.size())
    throw Error(ErrorCode::MalformedTile, "payload length does not match px*py");

  TileGrid t(vp);
  for (std::size_t i = 0; i < vp.size(); ++i) {
    t.fate[i] = get<std::uint8_t>(bytes, pos);
    t.value[i] = get<std::uint32_t>(bytes, pos);
    t.aux[i] = get<float>(bytes, pos);
  }
  return t;
}

}  // namespace tandel
