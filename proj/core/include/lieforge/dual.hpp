#pragma once

#include <cmath>

namespace lieforge {

/// Forward-mode dual number value + derivative * eps with eps^2 = 0.
struct Dual {
  double value = 0.0;
  double derivative = 0.0;

  constexpr Dual() = default;
  constexpr Dual(double v, double d = 0.0) : value(v), derivative(d) {}  // NOLINT

  friend constexpr Dual operator+(Dual a, Dual b) { return {a.value + b.value, a.derivative + b.derivative}; }
  friend constexpr Dual operator-(Dual a, Dual b) { return {a.value - b.value, a.derivative - b.derivative}; }
  friend constexpr Dual operator-(Dual a) { return {-a.value, -a.derivative}; }
  friend constexpr Dual operator*(Dual a, Dual b) {
    return {a.value * b.value, a.derivative * b.value + a.value * b.derivative};
  }
  friend constexpr Dual operator/(Dual a, Dual b) {
    return {a.value / b.value, (a.derivative * b.value - a.value * b.derivative) / (b.value * b.value)};
  }
};

inline Dual exp(Dual a) {
  const double e = std::exp(a.value);
  return {e, e * a.derivative};
}

inline Dual log(Dual a) { return {std::log(a.value), a.derivative / a.value}; }

inline Dual atan(Dual a) { return {std::atan(a.value), a.derivative / (1.0 + a.value * a.value)}; }

inline double value_of(double x) { return x; }
inline double value_of(Dual x) { return x.value; }

}  // namespace lieforge
