#pragma once

#include <numbers>

namespace bell {

// Analyzer angle. Carried in degrees end to end (configs and published tables
// are written in degrees); converted to radians only at trigonometric
// call sites. No range restriction: the trig functions handle periodicity.
struct Angle {
  double degrees = 0.0;

  constexpr double radians() const {
    return degrees * (std::numbers::pi / 180.0);
  }

  friend constexpr bool operator==(Angle, Angle) = default;
};

namespace literals {
constexpr Angle operator""_deg(long double d) {
  return Angle{static_cast<double>(d)};
}
constexpr Angle operator""_deg(unsigned long long d) {
  return Angle{static_cast<double>(d)};
}
}  // namespace literals

}  // namespace bell
