#pragma once

#include <stdexcept>

#include "hhc/eval.hpp"

namespace hhc {

/// One-to-one transfer of a curve point between two proper curves sharing the
/// first parameter digit q1:
///   f_nu(t) = p_{q1}(nu) ( p_{q1}(nu')^{-1} ( f_nu'(t) ) ).
/// Throws std::domain_error when w is not in the source map's quadrant image.
inline DyadicVec2 transfer_point(CurveId nu, CurveId nu_prime, int q1, const DyadicVec2& w) {
  if (!nu.proper() || !nu_prime.proper())
    throw std::invalid_argument("transfer_point: both curves must be proper");
  return affine_apply(quadrant_map(nu, q1), affine_unapply(quadrant_map(nu_prime, q1), w));
}

/// Distance preservation within a shared quadrant: points with the same first
/// digit keep their pairwise distance when transferred between proper curves
/// (the rotation parts are orthogonal). Compared as exact equality of squared
/// distances, which are dyadic rationals.
inline bool transfer_distance_check(CurveId nu, CurveId nu_prime, int k,
                                    const QuaternaryFraction& t, const QuaternaryFraction& t1) {
  if (!nu.proper() || !nu_prime.proper())
    throw std::invalid_argument("transfer_distance_check: both curves must be proper");
  if (t.digits.empty() || t1.digits.empty() || t.digits[0] != t1.digits[0])
    throw std::invalid_argument("transfer_distance_check: parameters must share the first digit");
  const DyadicScalar d_nu = squared_distance(eval_proper(nu, k, t), eval_proper(nu, k, t1));
  const DyadicScalar d_nu_prime = squared_distance(eval_proper(nu_prime, k, t), eval_proper(nu_prime, k, t1));
  return d_nu == d_nu_prime;
}

}  // namespace hhc
