#pragma once

#include <stdexcept>

#include "hhc/dyadic.hpp"
#include "hhc/rotation.hpp"

namespace hhc {

/// Integer translation vector, one of t_0..t_5. Stored un-halved, exactly as
/// published; the 1/2 factor lives in affine_apply.
struct TranslationVec {
  int tx = 0;
  int ty = 0;
  friend constexpr bool operator==(const TranslationVec&, const TranslationVec&) = default;
};

inline constexpr std::array<TranslationVec, 6> kTranslations = {{
    {0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 1}, {1, 2},
}};

/// The operator [U, t]_(1/2): v -> (U*v + t)/2, which places a shrunken
/// rotated/reflected copy of the unit square into one quadrant. `reversed`
/// marks the reversion decoration; it acts on traversal order, not on
/// individual points, so apply/unapply ignore it.
struct AffineMap {
  Rotation rotation = Rotation::I;
  TranslationVec translation;
  bool reversed = false;
  friend constexpr bool operator==(const AffineMap&, const AffineMap&) = default;
};

constexpr DyadicVec2 affine_apply(const AffineMap& p, const DyadicVec2& v) {
  DyadicVec2 rotated = rot_apply(p.rotation, v);
  return {(rotated.x + DyadicScalar::from_int(p.translation.tx)).half(),
          (rotated.y + DyadicScalar::from_int(p.translation.ty)).half()};
}

/// Inverse of affine_apply: w -> U^T * (2w - t). Throws std::domain_error when
/// w is not in the image of the unit square under p.
constexpr DyadicVec2 affine_unapply(const AffineMap& p, const DyadicVec2& w) {
  const DyadicScalar two_wx = w.x + w.x, two_wy = w.y + w.y;
  DyadicVec2 shifted{two_wx - DyadicScalar::from_int(p.translation.tx),
                     two_wy - DyadicScalar::from_int(p.translation.ty)};
  DyadicVec2 v = rot_apply(rot_inv(p.rotation), shifted);
  const DyadicScalar zero, one(1, 0);
  if (v.x < zero || v.x > one || v.y < zero || v.y > one)
    throw std::domain_error("affine_unapply: point outside the map's quadrant image");
  return v;
}

/// Geometric quadrant covered by p's image of the unit square:
/// 0 = lower-left, 1 = upper-left, 2 = upper-right, 3 = lower-right.
constexpr int affine_quadrant(const AffineMap& p) {
  const DyadicVec2 c = affine_apply(p, kOmega);
  const DyadicScalar half(1, 1);
  const bool right = c.x > half, upper = c.y > half;
  if (!right) return upper ? 1 : 0;
  return upper ? 2 : 3;
}

}  // namespace hhc
