#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "hhc/dyadic.hpp"

namespace hhc {

/// The eight rotation/reflection operators {±U_I, ±U_R, ±U_V, ±U_H}.
/// U_I = identity, U_R = swap axes, U_V = quarter turn, U_H = flip y.
enum class Rotation : std::uint8_t { I, R, NegI, NegR, V, H, NegV, NegH };

inline constexpr std::array<Rotation, 8> kAllRotations = {
    Rotation::I, Rotation::R, Rotation::NegI, Rotation::NegR,
    Rotation::V, Rotation::H, Rotation::NegV, Rotation::NegH};

/// 2x2 integer matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
  int a, b, c, d;
  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;

  friend constexpr Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  constexpr Mat2 transpose() const { return {a, c, b, d}; }
  constexpr int det() const { return a * d - b * c; }
};

constexpr Mat2 rot_matrix(Rotation r) {
  switch (r) {
    case Rotation::I:    return {1, 0, 0, 1};
    case Rotation::R:    return {0, 1, 1, 0};
    case Rotation::V:    return {0, -1, 1, 0};
    case Rotation::H:    return {1, 0, 0, -1};
    case Rotation::NegI: return {-1, 0, 0, -1};
    case Rotation::NegR: return {0, -1, -1, 0};
    case Rotation::NegV: return {0, 1, -1, 0};
    case Rotation::NegH: return {-1, 0, 0, 1};
  }
  return {0, 0, 0, 0};  // unreachable
}

constexpr std::string_view rot_name(Rotation r) {
  switch (r) {
    case Rotation::I:    return "U_I";
    case Rotation::R:    return "U_R";
    case Rotation::V:    return "U_V";
    case Rotation::H:    return "U_H";
    case Rotation::NegI: return "-U_I";
    case Rotation::NegR: return "-U_R";
    case Rotation::NegV: return "-U_V";
    case Rotation::NegH: return "-U_H";
  }
  return "?";
}

constexpr Rotation rot_from_matrix(const Mat2& m) {
  for (Rotation r : kAllRotations) {
    if (rot_matrix(r) == m) return r;
  }
  throw std::invalid_argument("matrix is not one of the eight rotation operators");
}

/// Group product: the label whose matrix equals matrix(a) * matrix(b).
constexpr Rotation rot_mul(Rotation a, Rotation b) {
  return rot_from_matrix(rot_matrix(a) * rot_matrix(b));
}

/// Group inverse (orthogonal, so the transpose).
constexpr Rotation rot_inv(Rotation a) {
  return rot_from_matrix(rot_matrix(a).transpose());
}

/// Smallest n >= 1 with a^n = identity.
constexpr int rot_order(Rotation a) {
  Rotation acc = a;
  int n = 1;
  while (acc != Rotation::I) {
    acc = rot_mul(acc, a);
    ++n;
  }
  return n;
}

constexpr DyadicVec2 rot_apply(Rotation r, const DyadicVec2& v) {
  const Mat2 m = rot_matrix(r);
  auto scale = [](int c, DyadicScalar s) {
    return c == 0 ? DyadicScalar() : (c > 0 ? s : -s);
  };
  return {scale(m.a, v.x) + scale(m.b, v.y), scale(m.c, v.x) + scale(m.d, v.y)};
}

/// Integer-vector action, for lattice computations.
constexpr std::array<std::int64_t, 2> rot_apply_int(Rotation r, std::int64_t x, std::int64_t y) {
  const Mat2 m = rot_matrix(r);
  return {m.a * x + m.b * y, m.c * x + m.d * y};
}

}  // namespace hhc
