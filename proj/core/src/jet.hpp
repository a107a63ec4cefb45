#pragma once

#include <array>
#include <cmath>

namespace htube::detail {

// Forward-mode dual number carrying a value and its gradient in three variables.
struct Jet3 {
  double v = 0.0;
  std::array<double, 3> d{};

  Jet3() = default;
  Jet3(double value) : v(value) {}  // NOLINT: implicit constants are convenient here
  static Jet3 variable(double value, int i) {
    Jet3 j(value);
    j.d[static_cast<std::size_t>(i)] = 1.0;
    return j;
  }
};

inline Jet3 operator+(const Jet3& a, const Jet3& b) {
  Jet3 r(a.v + b.v);
  for (int i = 0; i < 3; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}
inline Jet3 operator-(const Jet3& a, const Jet3& b) {
  Jet3 r(a.v - b.v);
  for (int i = 0; i < 3; ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}
inline Jet3 operator-(const Jet3& a) {
  Jet3 r(-a.v);
  for (int i = 0; i < 3; ++i) r.d[i] = -a.d[i];
  return r;
}
inline Jet3 operator*(const Jet3& a, const Jet3& b) {
  Jet3 r(a.v * b.v);
  for (int i = 0; i < 3; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return r;
}
inline Jet3 operator/(const Jet3& a, const Jet3& b) {
  Jet3 r(a.v / b.v);
  for (int i = 0; i < 3; ++i) r.d[i] = (a.d[i] * b.v - a.v * b.d[i]) / (b.v * b.v);
  return r;
}

}  // namespace htube::detail
