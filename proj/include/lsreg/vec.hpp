#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace lsreg {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat4 = std::array<std::array<double, 4>, 4>;
// 4 rows by 3 columns, used for bases of tangent spaces to level sets in R^4.
using Mat43 = std::array<std::array<double, 3>, 4>;

template <std::size_t N>
inline std::array<double, N> operator+(const std::array<double, N>& a,
                                       const std::array<double, N>& b) {
  std::array<double, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
  return r;
}

template <std::size_t N>
inline std::array<double, N> operator-(const std::array<double, N>& a,
                                       const std::array<double, N>& b) {
  std::array<double, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
  return r;
}

template <std::size_t N>
inline std::array<double, N> operator*(double c, const std::array<double, N>& a) {
  std::array<double, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = c * a[i];
  return r;
}

template <std::size_t N>
inline std::array<double, N> operator*(const std::array<double, N>& a, double c) {
  return c * a;
}

template <std::size_t N>
inline std::array<double, N> operator/(const std::array<double, N>& a, double c) {
  std::array<double, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] / c;
  return r;
}

template <std::size_t N>
inline std::array<double, N> operator-(const std::array<double, N>& a) {
  std::array<double, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = -a[i];
  return r;
}

template <std::size_t N>
inline double dot(const std::array<double, N>& a, const std::array<double, N>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

template <std::size_t N>
inline double norm_sq(const std::array<double, N>& a) {
  return dot(a, a);
}

template <std::size_t N>
inline double norm(const std::array<double, N>& a) {
  return std::sqrt(norm_sq(a));
}

template <std::size_t N>
inline double max_abs_diff(const std::array<double, N>& a, const std::array<double, N>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

// Minkowski pairing with signature (+,-,-,-); index 0 is the timelike slot.
inline double lorentz_dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

inline double det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
       - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
       + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace lsreg
