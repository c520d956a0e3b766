#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hhc {

/// Exact dyadic rational: numerator / 2^exponent.
///
/// Canonical form: numerator is odd or zero; zero carries exponent 0.
/// All arithmetic is closed and exact; there is no rounding anywhere.
/// Intended range: curve orders up to 30, i.e. exponents up to ~62 after
/// squaring, which fits comfortably in the 64-bit numerator.
struct DyadicScalar {
  std::int64_t num = 0;
  int exp = 0;  // denominator is 2^exp, exp >= 0

  constexpr DyadicScalar() = default;
  constexpr DyadicScalar(std::int64_t n, int e) : num(n), exp(e) { canonicalize(); }

  static constexpr DyadicScalar from_int(std::int64_t n) { return DyadicScalar(n, 0); }

  constexpr void canonicalize() {
    if (num == 0) {
      exp = 0;
      return;
    }
    while (exp > 0 && (num & 1) == 0) {
      num >>= 1;
      --exp;
    }
  }

  constexpr bool is_zero() const { return num == 0; }

  constexpr DyadicScalar operator-() const { return DyadicScalar(-num, exp); }

  constexpr DyadicScalar half() const { return DyadicScalar(num, num == 0 ? 0 : exp + 1); }

  friend constexpr DyadicScalar operator+(DyadicScalar a, DyadicScalar b) {
    const int e = a.exp > b.exp ? a.exp : b.exp;
    return DyadicScalar((a.num << (e - a.exp)) + (b.num << (e - b.exp)), e);
  }
  friend constexpr DyadicScalar operator-(DyadicScalar a, DyadicScalar b) { return a + (-b); }
  friend constexpr DyadicScalar operator*(DyadicScalar a, DyadicScalar b) {
    return DyadicScalar(a.num * b.num, a.exp + b.exp);
  }

  friend constexpr bool operator==(DyadicScalar a, DyadicScalar b) {
    return a.num == b.num && a.exp == b.exp;  // canonical form makes this valid
  }
  friend constexpr std::strong_ordering operator<=>(DyadicScalar a, DyadicScalar b) {
    const int e = a.exp > b.exp ? a.exp : b.exp;
    return (a.num << (e - a.exp)) <=> (b.num << (e - b.exp));
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(std::int64_t{1} << exp); }

  /// Serialized form "n/2^e", e.g. "1/2^3" for 1/8. Uniform even for integers ("5/2^0").
  std::string to_string() const {
    return std::to_string(num) + "/2^" + std::to_string(exp);
  }

  /// Exact terminating decimal expansion, e.g. "0.125", "-0.5", "3".
  /// Valid for exponents up to 37 (numerator * 5^exp must fit in 128 bits).
  std::string to_decimal_string() const {
    if (num == 0) return "0";
    bool negative = num < 0;
    unsigned __int128 scaled = negative ? -static_cast<__int128>(num) : static_cast<__int128>(num);
    for (int i = 0; i < exp; ++i) scaled *= 5;  // n/2^e = n*5^e / 10^e
    unsigned __int128 pow10 = 1;
    for (int i = 0; i < exp; ++i) pow10 *= 10;
    unsigned __int128 ipart = scaled / pow10;
    unsigned __int128 fpart = scaled % pow10;
    auto u128_str = [](unsigned __int128 v) {
      if (v == 0) return std::string("0");
      std::string s;
      while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
      }
      return s;
    };
    std::string out = negative ? "-" : "";
    out += u128_str(ipart);
    if (fpart != 0) {
      std::string frac = u128_str(fpart);
      frac.insert(0, static_cast<std::size_t>(exp) - frac.size(), '0');
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
      out += "." + frac;
    }
    return out;
  }
};

/// Parses the "n/2^e" form produced by DyadicScalar::to_string.
inline DyadicScalar parse_dyadic(const std::string& text) {
  const auto sep = text.find("/2^");
  if (sep == std::string::npos) throw std::invalid_argument("dyadic: expected \"n/2^e\", got \"" + text + "\"");
  std::size_t pos = 0;
  const std::int64_t n = std::stoll(text.substr(0, sep), &pos);
  if (pos != sep) throw std::invalid_argument("dyadic: bad numerator in \"" + text + "\"");
  const int e = std::stoi(text.substr(sep + 3), &pos);
  if (pos != text.size() - sep - 3 || e < 0) throw std::invalid_argument("dyadic: bad exponent in \"" + text + "\"");
  return DyadicScalar(n, e);
}

/// Exact point in (or near) the unit square.
struct DyadicVec2 {
  DyadicScalar x;
  DyadicScalar y;

  friend constexpr DyadicVec2 operator+(const DyadicVec2& a, const DyadicVec2& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend constexpr DyadicVec2 operator-(const DyadicVec2& a, const DyadicVec2& b) {
    return {a.x - b.x, a.y - b.y};
  }
  constexpr DyadicVec2 operator-() const { return {-x, -y}; }
  constexpr DyadicVec2 half() const { return {x.half(), y.half()}; }

  friend constexpr bool operator==(const DyadicVec2& a, const DyadicVec2& b) = default;

  /// |v|^2 as an exact dyadic rational.
  constexpr DyadicScalar squared_norm() const { return x * x + y * y; }
};

/// Squared Euclidean distance, exact.
constexpr DyadicScalar squared_distance(const DyadicVec2& a, const DyadicVec2& b) {
  return (a - b).squared_norm();
}

inline const DyadicVec2 kOmega{DyadicScalar(1, 1), DyadicScalar(1, 1)};  // (1/2, 1/2)

}  // namespace hhc
