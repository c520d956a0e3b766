#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hhc/affine.hpp"

namespace hhc {

enum class CurveKind { Proper, Improper };

/// One of the twelve homogeneous Hilbert curves, indexed nu = 0..11.
/// nu <= 5 are the proper curves (Hilbert, Moore, Liu 1-4); nu >= 6 are the
/// improper curves I1..I6, which involve reversion.
struct CurveId {
  int nu = 0;

  constexpr CurveId() = default;
  constexpr explicit CurveId(int n) : nu(n) {
    if (n < 0 || n > 11) throw std::invalid_argument("curve index must be 0..11");
  }

  constexpr CurveKind kind() const { return nu <= 5 ? CurveKind::Proper : CurveKind::Improper; }
  constexpr bool proper() const { return nu <= 5; }
  constexpr bool improper() const { return nu >= 6; }

  constexpr std::string_view name() const {
    constexpr std::array<std::string_view, 12> names = {
        "Hilbert", "Moore", "Liu1", "Liu2", "Liu3", "Liu4",
        "I1", "I2", "I3", "I4", "I5", "I6"};
    return names[static_cast<std::size_t>(nu)];
  }

  friend constexpr bool operator==(CurveId, CurveId) = default;
};

/// Accepts a 0..11 index or a case-insensitive name (hilbert, moore,
/// liu1..liu4, i1..i6).
inline std::optional<CurveId> curve_from_string(std::string_view text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  constexpr std::array<std::string_view, 12> names = {
      "hilbert", "moore", "liu1", "liu2", "liu3", "liu4",
      "i1", "i2", "i3", "i4", "i5", "i6"};
  for (int nu = 0; nu < 12; ++nu)
    if (lower == names[static_cast<std::size_t>(nu)]) return CurveId(nu);
  if (!lower.empty() && lower.find_first_not_of("0123456789") == std::string::npos) {
    const int nu = std::stoi(lower);
    if (nu <= 11) return CurveId(nu);
  }
  return std::nullopt;
}

/// The four quadrant maps of one curve plus the order-(k-1) curve they
/// compose over: the Hilbert curve for proper curves, Liu4 for improper ones.
struct CurveTable {
  CurveId id;
  std::array<AffineMap, 4> maps;
  CurveId base;
};

/// The published affine-transformation table for all twelve curves.
/// Reversed flags reproduce the reversion decorations of the improper rows.
constexpr CurveTable curve_table(CurveId id) {
  using R = Rotation;
  auto m = [](Rotation rot, int t, bool rev = false) {
    return AffineMap{rot, kTranslations[static_cast<std::size_t>(t)], rev};
  };
  CurveTable table;
  table.id = id;
  table.base = id.proper() ? CurveId(0) : CurveId(5);
  switch (id.nu) {
    case 0:  table.maps = {m(R::R, 0),          m(R::I, 1),          m(R::I, 3),          m(R::NegR, 4)};       break;
    case 1:  table.maps = {m(R::V, 2),          m(R::V, 3),          m(R::NegV, 5),       m(R::NegV, 3)};       break;
    case 2:  table.maps = {m(R::NegI, 3),       m(R::I, 1),          m(R::I, 3),          m(R::NegI, 4)};       break;
    case 3:  table.maps = {m(R::H, 1),          m(R::V, 3),          m(R::NegV, 5),       m(R::H, 3)};          break;
    case 4:  table.maps = {m(R::R, 0),          m(R::I, 1),          m(R::I, 3),          m(R::NegI, 4)};       break;
    case 5:  table.maps = {m(R::H, 1),          m(R::V, 3),          m(R::NegV, 5),       m(R::NegV, 3)};       break;
    case 6:  table.maps = {m(R::NegI, 3),       m(R::NegH, 3, true), m(R::I, 3),          m(R::H, 3, true)};    break;
    case 7:  table.maps = {m(R::NegI, 3),       m(R::NegH, 3, true), m(R::I, 3),          m(R::NegR, 4)};       break;
    case 8:  table.maps = {m(R::NegV, 1, true), m(R::NegH, 3, true), m(R::I, 3),          m(R::NegR, 4)};       break;
    case 9:  table.maps = {m(R::NegR, 3, true), m(R::V, 3),          m(R::R, 3, true),    m(R::NegV, 3)};       break;
    case 10: table.maps = {m(R::H, 1),          m(R::V, 3),          m(R::R, 3, true),    m(R::NegI, 4, true)}; break;
    case 11: table.maps = {m(R::H, 1),          m(R::V, 3),          m(R::R, 3, true),    m(R::NegV, 3)};       break;
    default: throw std::invalid_argument("curve index must be 0..11");
  }
  return table;
}

/// The quadrant map selected by parameter digit q for curve nu.
constexpr AffineMap quadrant_map(CurveId id, int q) {
  if (q < 0 || q > 3) throw std::invalid_argument("quadrant digit must be 0..3");
  return curve_table(id).maps[static_cast<std::size_t>(q)];
}

}  // namespace hhc
