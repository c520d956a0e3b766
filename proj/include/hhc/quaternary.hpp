#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hhc/dyadic.hpp"

namespace hhc {

/// Base-4 expansion of the curve parameter t in [0, 1):
/// t = q_1/4 + q_2/4^2 + ... + q_k/4^k, digits most significant first.
struct QuaternaryFraction {
  std::vector<std::uint8_t> digits;  // each in 0..3

  int order() const { return static_cast<int>(digits.size()); }

  /// Positional index: digits interpreted as a base-4 integer, i.e. t * 4^k.
  std::uint64_t to_index() const {
    std::uint64_t idx = 0;
    for (std::uint8_t d : digits) idx = idx * 4 + d;
    return idx;
  }

  /// Exact value as a dyadic rational (4^k is a power of two).
  DyadicScalar value() const {
    return DyadicScalar(static_cast<std::int64_t>(to_index()), 2 * order());
  }

  std::string to_string() const {
    std::string s;
    for (std::uint8_t d : digits) s.push_back(static_cast<char>('0' + d));
    return s;
  }

  friend bool operator==(const QuaternaryFraction&, const QuaternaryFraction&) = default;
};

inline QuaternaryFraction quaternary_parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("quaternary: empty digit string");
  QuaternaryFraction q;
  q.digits.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '3')
      throw std::invalid_argument(std::string("quaternary: invalid digit '") + c + "' (expected 0-3)");
    q.digits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return q;
}

/// Digit string of i/4^k, zero-padded to k digits. Requires 0 <= i < 4^k.
inline QuaternaryFraction quaternary_from_index(std::uint64_t i, int k) {
  if (k < 1 || k > 30) throw std::invalid_argument("quaternary: order must be 1..30");
  if (i >> (2 * k)) throw std::invalid_argument("quaternary: index out of range for order");
  QuaternaryFraction q;
  q.digits.resize(static_cast<std::size_t>(k));
  for (int s = k - 1; s >= 0; --s) {
    q.digits[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(i & 3);
    i >>= 2;
  }
  return q;
}

}  // namespace hhc
