#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "hhc/curves.hpp"
#include "hhc/quaternary.hpp"

namespace hhc {

namespace detail {

inline void require_digits(const QuaternaryFraction& q, int k) {
  if (q.order() != k) throw std::invalid_argument("parameter digit count must equal the order");
  if (k < 1) throw std::invalid_argument("order must be >= 1");
}

}  // namespace detail

/// Proper-curve arithmetic representation, evaluated as the nested composition
///   f(t) = p_{q1} o p_{q2} o ... o p_{qk} (Omega)
/// with the outermost map from curve nu and all inner maps from the Hilbert
/// curve; Omega = (1/2, 1/2).
inline DyadicVec2 eval_proper(CurveId nu, int k, const QuaternaryFraction& q) {
  if (!nu.proper()) throw std::invalid_argument("eval_proper: curve is improper");
  detail::require_digits(q, k);
  static const CurveTable hilbert = curve_table(CurveId(0));
  DyadicVec2 v = kOmega;
  for (int s = k - 1; s >= 1; --s)
    v = affine_apply(hilbert.maps[q.digits[static_cast<std::size_t>(s)]], v);
  return affine_apply(quadrant_map(nu, q.digits[0]), v);
}

/// Same value via the expanded sum
///   f(t) = (1/2^k) P_k Omega + sum_{j=2..k} (1/2^j) P_{j-1} t_{qj} + (1/2) t_{q1},
/// where P_s is the rotation product of the first s maps. (The j-th term's
/// rotation product runs through index j-1, which is what the telescoped
/// expansion of the nested form produces.)
inline DyadicVec2 eval_proper_sum(CurveId nu, int k, const QuaternaryFraction& q) {
  if (!nu.proper()) throw std::invalid_argument("eval_proper_sum: curve is improper");
  detail::require_digits(q, k);
  static const CurveTable hilbert = curve_table(CurveId(0));
  const CurveTable table = curve_table(nu);

  const TranslationVec t1 = table.maps[q.digits[0]].translation;
  DyadicVec2 acc{DyadicScalar(t1.tx, 1), DyadicScalar(t1.ty, 1)};

  Rotation prefix = table.maps[q.digits[0]].rotation;  // P_1
  for (int j = 2; j <= k; ++j) {
    const TranslationVec tj = hilbert.maps[q.digits[static_cast<std::size_t>(j - 1)]].translation;
    const auto rotated = rot_apply_int(prefix, tj.tx, tj.ty);
    acc.x = acc.x + DyadicScalar(rotated[0], j);
    acc.y = acc.y + DyadicScalar(rotated[1], j);
    prefix = rot_mul(prefix, hilbert.maps[q.digits[static_cast<std::size_t>(j - 1)]].rotation);  // P_j
  }
  const auto omega_term = rot_apply_int(prefix, 1, 1);  // P_k * (1,1), over 2^(k+1)
  acc.x = acc.x + DyadicScalar(omega_term[0], k + 1);
  acc.y = acc.y + DyadicScalar(omega_term[1], k + 1);
  return acc;
}

/// Number of digits equal to 3 among q_s..q_t (1-based, inclusive).
/// An empty range (s > t) counts zero.
inline int count3(const QuaternaryFraction& q, int s, int t) {
  if (s < 1 || t > q.order()) throw std::out_of_range("count3: digit range out of bounds");
  int n = 0;
  for (int m = s; m <= t; ++m)
    if (q.digits[static_cast<std::size_t>(m - 1)] == 3) ++n;
  return n;
}

/// Number of digits in {0, 3} among q_s..q_t.
inline int count03(const QuaternaryFraction& q, int s, int t) {
  if (s < 1 || t > q.order()) throw std::out_of_range("count03: digit range out of bounds");
  int n = 0;
  for (int m = s; m <= t; ++m) {
    const auto d = q.digits[static_cast<std::size_t>(m - 1)];
    if (d == 0 || d == 3) ++n;
  }
  return n;
}

/// Published polynomial form (1/6) sum q(q-2)(q-1); agrees with count3 for
/// every range.
inline int count3_poly(const QuaternaryFraction& q, int s, int t) {
  if (s < 1 || t > q.order()) throw std::out_of_range("count3_poly: digit range out of bounds");
  int acc = 0;
  for (int m = s; m <= t; ++m) {
    const int d = q.digits[static_cast<std::size_t>(m - 1)];
    acc += d * (d - 2) * (d - 1);
  }
  return acc / 6;
}

/// Published polynomial form t + (1/2) sum q(q-3), reproduced verbatim.
/// Correct only for s = 1: the additive term is the range length written as
/// "t", so for s > 1 it overcounts by s-1. count03 is the authoritative path.
inline int count03_poly(const QuaternaryFraction& q, int s, int t) {
  if (s < 1 || t > q.order()) throw std::out_of_range("count03_poly: digit range out of bounds");
  int acc = 0;
  for (int m = s; m <= t; ++m) {
    const int d = q.digits[static_cast<std::size_t>(m - 1)];
    acc += d * (d - 3);
  }
  return t + acc / 2;
}

/// eval_proper with the inner Hilbert rotation products replaced by digit
/// counts: the product of Hilbert rotations over q_2..q_j collapses to
/// (-1)^(#3) U_R^(#03), and U_R fixes Omega. Output is identical to
/// eval_proper; cost is O(k) integer updates with no matrix products.
inline DyadicVec2 eval_proper_fast(CurveId nu, int k, const QuaternaryFraction& q) {
  if (!nu.proper()) throw std::invalid_argument("eval_proper_fast: curve is improper");
  detail::require_digits(q, k);
  static const CurveTable hilbert = curve_table(CurveId(0));

  // Numerators over the common denominator 2^(k+1), accumulated inside the
  // leading rotation's frame and rotated once at the end.
  std::int64_t ax = 0, ay = 0;
  int sign = 1;     // (-1)^{#3(2, j-1)}
  int swapped = 0;  // #03(2, j-1) mod 2
  for (int j = 2; j <= k; ++j) {
    const TranslationVec tj = hilbert.maps[q.digits[static_cast<std::size_t>(j - 1)]].translation;
    const std::int64_t w = std::int64_t{1} << (k + 1 - j);
    if (swapped) {
      ax += sign * w * tj.ty;
      ay += sign * w * tj.tx;
    } else {
      ax += sign * w * tj.tx;
      ay += sign * w * tj.ty;
    }
    const auto d = q.digits[static_cast<std::size_t>(j - 1)];
    if (d == 3) sign = -sign;
    if (d == 0 || d == 3) swapped ^= 1;
  }
  ax += sign;  // the Omega term: sign * U_R^{#03} * (1,1) = sign * (1,1)
  ay += sign;

  const AffineMap lead = quadrant_map(nu, q.digits[0]);
  const auto rotated = rot_apply_int(lead.rotation, ax, ay);
  const std::int64_t scale = std::int64_t{1} << k;
  return {DyadicScalar(rotated[0] + scale * lead.translation.tx, k + 1),
          DyadicScalar(rotated[1] + scale * lead.translation.ty, k + 1)};
}

/// Pre-transformation of the parameter for improper curves: within each
/// reversed quadrant (the decorated entries of the affine table) the
/// parameter reflects to t' = (2*q1+1)/4 - 1/4^k - t, i.e. the within-quadrant
/// index i maps to 4^(k-1)-1-i. Undecorated quadrants pass t through.
/// The transform fixes q1 and is an involution.
inline QuaternaryFraction reversal_transform(CurveId nu, int k, const QuaternaryFraction& q) {
  if (!nu.improper()) throw std::invalid_argument("reversal_transform: curve is proper");
  if (k < 2) throw std::invalid_argument("reversal_transform: order must be >= 2");
  detail::require_digits(q, k);
  if (!quadrant_map(nu, q.digits[0]).reversed) return q;
  std::uint64_t within = 0;
  for (int s = 1; s < k; ++s) within = within * 4 + q.digits[static_cast<std::size_t>(s)];
  std::uint64_t reflected = (std::uint64_t{1} << (2 * (k - 1))) - 1 - within;
  QuaternaryFraction out;
  out.digits.resize(static_cast<std::size_t>(k));
  out.digits[0] = q.digits[0];
  for (int s = k - 1; s >= 1; --s) {
    out.digits[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(reflected & 3);
    reflected >>= 2;
  }
  return out;
}

/// Improper-curve evaluation. For k >= 3: apply the reversal transform, then
/// compose the curve's own map over one Liu4 level over Hilbert levels,
///   f(t) = p_{q'1} o (Liu4 p_{q'2}) o (Hilbert p_{q'3..q'k}) (Omega).
/// Order 2 is defined separately: every improper curve's order-2 layout is
/// the Liu3 order-2 curve, so the evaluation delegates there (the reversal
/// transform is still well defined at k = 2 and is reported by callers, but
/// the order-2 point does not use it).
inline DyadicVec2 eval_improper(CurveId nu, int k, const QuaternaryFraction& q) {
  if (!nu.improper()) throw std::invalid_argument("eval_improper: curve is proper");
  if (k < 2) throw std::invalid_argument("eval_improper: order must be >= 2");
  detail::require_digits(q, k);
  if (k == 2) return eval_proper(CurveId(4), 2, q);

  const QuaternaryFraction qp = reversal_transform(nu, k, q);
  static const CurveTable hilbert = curve_table(CurveId(0));
  DyadicVec2 v = kOmega;
  for (int s = k - 1; s >= 2; --s)
    v = affine_apply(hilbert.maps[qp.digits[static_cast<std::size_t>(s)]], v);
  v = affine_apply(quadrant_map(CurveId(5), qp.digits[1]), v);
  return affine_apply(quadrant_map(nu, qp.digits[0]), v);
}

/// Order-k point of curve nu at parameter q (dispatches on proper/improper).
inline DyadicVec2 eval(CurveId nu, int k, const QuaternaryFraction& q) {
  return nu.proper() ? eval_proper(nu, k, q) : eval_improper(nu, k, q);
}

/// Point plus evaluation context; improper curves also record the
/// post-reversion parameter.
struct EvalResult {
  DyadicVec2 point;
  CurveId curve;
  int order = 0;
  QuaternaryFraction parameter;
  std::optional<QuaternaryFraction> post_reversion;
};

inline EvalResult evaluate(CurveId nu, int k, const QuaternaryFraction& q) {
  EvalResult r;
  r.point = eval(nu, k, q);
  r.curve = nu;
  r.order = k;
  r.parameter = q;
  if (nu.improper()) r.post_reversion = reversal_transform(nu, k, q);
  return r;
}

}  // namespace hhc
