#pragma once

#include <cmath>
#include <complex>
#include <optional>

namespace tandel {

using cplx = std::complex<double>;

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// A point of the Riemann sphere. Infinity is an explicit state, never a
/// large finite magnitude.
class SpherePoint {
 public:
  SpherePoint() = default;
  static SpherePoint finite(cplx z) { return SpherePoint(z); }
  static SpherePoint infinity() { return SpherePoint(); }

  bool is_infinity() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  /// Precondition: is_finite().
  cplx value() const { return *value_; }

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

 private:
  explicit SpherePoint(cplx z) : value_(z) {}
  std::optional<cplx> value_;
};

/// Chordal distance on the Riemann sphere, in [0, 2].
double chordal_distance(const SpherePoint& a, const SpherePoint& b);

}  // namespace tandel
