#include "tandel/colorize.hpp"

#include <algorithm>
#include <cmath>
#include <csetjmp>
#include <fstream>
#include <stdexcept>

#include <png.h>

namespace tandel {

namespace {

Rgba gradient_at(const std::vector<Rgba>& stops, double t) {
  if (stops.empty()) return {255, 255, 255, 255};
  if (stops.size() == 1) return stops.front();
  t = std::clamp(t, 0.0, 1.0) * static_cast<double>(stops.size() - 1);
  const auto lo = std::min(static_cast<std::size_t>(t), stops.size() - 2);
  const double f = t - static_cast<double>(lo);
  Rgba out{};
  for (int c = 0; c < 4; ++c) {
    const double v = (1.0 - f) * stops[lo][c] + f * stops[lo + 1][c];
    out[c] = static_cast<std::uint8_t>(std::lround(v));
  }
  return out;
}

}  // namespace

Image colorize(const TileGrid& t, const PaletteSpec& palette) {
  Image img{t.viewport.px, t.viewport.py, std::vector<std::uint8_t>(t.fate.size() * 4)};

  std::uint32_t max_step = palette.max_step;
  if (max_step == 0) {
    for (std::size_t i = 0; i < t.fate.size(); ++i)
      if (t.fate[i] == static_cast<std::uint8_t>(FateCode::Escaped)) max_step = std::max(max_step, t.value[i]);
  }
  const double denom = std::log1p(static_cast<double>(std::max<std::uint32_t>(max_step, 1)));

  for (std::size_t i = 0; i < t.fate.size(); ++i) {
    Rgba c;
    switch (static_cast<FateCode>(t.fate[i])) {
      case FateCode::Escaped: c = gradient_at(palette.gradient, std::log1p(static_cast<double>(t.value[i])) / denom); break;
      case FateCode::PoleHit: c = palette.marker; break;
      case FateCode::Cycle:
      case FateCode::Undecided:
      default: c = palette.inside; break;
    }
    std::copy(c.begin(), c.end(), img.rgba.begin() + static_cast<std::ptrdiff_t>(4 * i));
  }
  return img;
}

std::vector<std::uint8_t> encode_png(const Image& img) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw std::runtime_error("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("png_create_info_struct failed");
  }

  std::vector<std::uint8_t> out;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("PNG encoding failed");
  }
  png_set_write_fn(
      png, &out,
      [](png_structp p, png_bytep data, png_size_t len) {
        auto* buf = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(p));
        buf->insert(buf->end(), data, data + len);
      },
      nullptr);
  png_set_IHDR(png, info, img.width, img.height, 8, PNG_COLOR_TYPE_RGBA, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (std::uint32_t y = 0; y < img.height; ++y)
    png_write_row(png, const_cast<png_bytep>(img.rgba.data() + static_cast<std::size_t>(y) * img.width * 4));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

std::vector<std::uint8_t> encode_ppm(const Image& img) {
  const std::string header = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + img.rgba.size() / 4 * 3);
  for (std::size_t i = 0; i < img.rgba.size(); i += 4) out.insert(out.end(), img.rgba.begin() + i, img.rgba.begin() + i + 3);
  return out;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("failed writing " + path);
}

}  // namespace tandel
