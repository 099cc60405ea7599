#include "tandel/render.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "tandel/error.hpp"
#include "tandel/rational_approx.hpp"

namespace tandel {

namespace {

constexpr std::uint32_t kBlock = 64;

struct PixelResult {
  FateCode fate = FateCode::Undecided;
  std::uint32_t value = 0;
  float aux = 0.0f;
};

std::uint32_t clamp_steps(long steps) { return static_cast<std::uint32_t>(std::max(0L, steps)); }

PixelResult from_fate(const OrbitFate& f) {
  switch (f.kind) {
    case OrbitFate::Kind::CapturedByZero: return {FateCode::Escaped, clamp_steps(f.steps), 0.0f};
    case OrbitFate::Kind::AttractingCycle:
      return {FateCode::Cycle, static_cast<std::uint32_t>(f.cycle->period),
              static_cast<float>(std::abs(f.cycle->multiplier))};
    case OrbitFate::Kind::PoleHit: return {FateCode::PoleHit, clamp_steps(f.steps), 0.0f};
    case OrbitFate::Kind::Undecided: break;
  }
  return {FateCode::Undecided, clamp_steps(f.steps), 0.0f};
}

PixelResult from_fate(const NewtonFate& f) {
  switch (f.kind) {
    case NewtonFate::Kind::ConvergedToRoot: return {FateCode::Escaped, clamp_steps(f.steps), 0.0f};
    case NewtonFate::Kind::AttractingCycle:
      return {FateCode::Cycle, static_cast<std::uint32_t>(f.cycle->period),
              static_cast<float>(std::abs(f.cycle->multiplier))};
    case NewtonFate::Kind::PoleHit: return {FateCode::PoleHit, clamp_steps(f.steps), 0.0f};
    case NewtonFate::Kind::Undecided: break;
  }
  return {FateCode::Undecided, clamp_steps(f.steps), 0.0f};
}

// Pixels are independent; blocks are claimed through a shared counter and
// every worker writes only to its own block.
template <class PixelFn>
TileGrid render_blocks(const Viewport& vp, unsigned workers, PixelFn&& pixel_fn) {
  if (vp.px == 0 || vp.py == 0 || !(vp.width > 0.0))
    throw Error(ErrorCode::ZeroPixelViewport, "viewport needs px, py >= 1 and a positive width");
  TileGrid grid(vp);
  const std::uint32_t bx = (vp.px + kBlock - 1) / kBlock;
  const std::uint32_t by = (vp.py + kBlock - 1) / kBlock;
  const std::size_t blocks = static_cast<std::size_t>(bx) * by;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    try {
      for (std::size_t b = next.fetch_add(1); b < blocks; b = next.fetch_add(1)) {
        const std::uint32_t i0 = static_cast<std::uint32_t>(b % bx) * kBlock;
        const std::uint32_t j0 = static_cast<std::uint32_t>(b / bx) * kBlock;
        for (std::uint32_t j = j0; j < std::min(j0 + kBlock, vp.py); ++j) {
          for (std::uint32_t i = i0; i < std::min(i0 + kBlock, vp.px); ++i) {
            const PixelResult r = pixel_fn(vp.pixel(i, j));
            const std::size_t idx = grid.index(i, j);
            grid.fate[idx] = static_cast<std::uint8_t>(r.fate);
            grid.value[idx] = r.value;
            grid.aux[idx] = r.aux;
          }
        }
      }
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(blocks);
    }
  };

  workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(std::max<std::size_t>(blocks, 1)));
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);
  return grid;
}

}  // namespace

unsigned default_workers() {
  if (const char* env = std::getenv("TANDELBROT_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

TileGrid render_parameter_plane(const ParamFamily& family, const Viewport& vp, const IterationSettings& s,
                                unsigned workers) {
  switch (family.kind) {
    case ParamFamily::Kind::Tangent:
      return render_blocks(vp, workers, [&s](cplx alpha) {
        if (!(std::abs(alpha) < 1.0) || alpha == cplx(0.0, 0.0)) return PixelResult{};
        const TangentParam p(alpha);
        return from_fate(classify_orbit(p, p.free_value(), s));
      });
    case ParamFamily::Kind::Newton:
      return render_blocks(vp, workers, [&s](cplx a) {
        if (a == cplx(0.0, 0.0)) return PixelResult{};
        return from_fate(classify_newton_orbit(NewtonParam(a), s));
      });
    case ParamFamily::Kind::AnMask: break;
  }

  if (family.n < 0) throw Error(ErrorCode::InvalidArgument, "n must be non-negative");
  if (family.k && *family.k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (family.delta && !(*family.delta > 0.0)) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  for (std::uint32_t j = 0; j < vp.py; ++j)
    for (std::uint32_t i = 0; i < vp.px; ++i) {
      const cplx a = vp.pixel(i, j);
      if (!(std::abs(a) < 0.5) || a == cplx(0.0, 0.0))
        throw Error(ErrorCode::GridOutsideHalfDisk, "every mask parameter must satisfy 0 < |alpha| < 1/2");
    }
  // Members render as Undecided (inside); non-members as Escaped at the step
  // that left V or broke the 1/delta bound.
  return render_blocks(vp, workers, [&family](cplx alpha) {
    const AnPixel r = classify_An_point(alpha, family.n, family.k, family.delta);
    if (r.member) return PixelResult{r.pole_hit && !family.k ? FateCode::PoleHit : FateCode::Undecided, r.step, 0.0f};
    return PixelResult{FateCode::Escaped, r.step, 0.0f};
  });
}

TileGrid render_dynamical_plane(const DynInstance& instance, const Viewport& vp, const IterationSettings& s,
                                unsigned workers) {
  if (const auto* p = std::get_if<TangentParam>(&instance)) {
    if (std::abs(p->alpha()) >= 1.0)
      throw Error(ErrorCode::ParamOutsideDisk, "dynamical plane needs |alpha| < 1; render 1/alpha instead");
    return render_blocks(vp, workers, [&](cplx z) { return from_fate(classify_orbit(*p, z, s)); });
  }
  const auto& np = std::get<NewtonParam>(instance);
  return render_blocks(vp, workers, [&](cplx z) { return from_fate(classify_newton_orbit_from(np, z, s)); });
}

}  // namespace tandel
