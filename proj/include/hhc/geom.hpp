#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hhc/eval.hpp"

namespace hhc {

/// One of the 4^depth congruent subsquares of the unit square, addressed by
/// lattice coordinates ix, iy in [0, 2^depth).
struct Cell {
  std::int32_t ix = 0;
  std::int32_t iy = 0;
  std::int32_t depth = 0;

  DyadicVec2 center() const {
    return {DyadicScalar(2 * std::int64_t{ix} + 1, depth + 1),
            DyadicScalar(2 * std::int64_t{iy} + 1, depth + 1)};
  }

  friend constexpr bool operator==(const Cell&, const Cell&) = default;
};

/// Ordered list of the 4^order cells visited by an order-k curve.
struct CellSequence {
  CurveId curve;
  int order = 0;
  std::vector<Cell> cells;
};

namespace detail {

/// Image of a depth-d cell under a quadrant map, as a depth-(d+1) cell.
/// Pure integer arithmetic: the map sends the cell center
/// ((2ix+1)/2^(d+1), (2iy+1)/2^(d+1)) to an odd-numerator point over 2^(d+2).
inline Cell cell_apply(const AffineMap& p, const Cell& c) {
  const auto rotated = rot_apply_int(p.rotation, 2 * std::int64_t{c.ix} + 1, 2 * std::int64_t{c.iy} + 1);
  const std::int64_t shift = std::int64_t{1} << (c.depth + 1);
  const std::int64_t nx = rotated[0] + shift * p.translation.tx;
  const std::int64_t ny = rotated[1] + shift * p.translation.ty;
  return {static_cast<std::int32_t>((nx - 1) / 2), static_cast<std::int32_t>((ny - 1) / 2),
          c.depth + 1};
}

/// Inverse of cell_apply; throws if the cell is outside the map's quadrant.
inline Cell cell_unapply(const AffineMap& p, const Cell& c) {
  const std::int64_t shift = std::int64_t{1} << c.depth;
  const std::int64_t wx = 2 * std::int64_t{c.ix} + 1 - shift * p.translation.tx;
  const std::int64_t wy = 2 * std::int64_t{c.iy} + 1 - shift * p.translation.ty;
  const auto back = rot_apply_int(rot_inv(p.rotation), wx, wy);
  const std::int64_t px = (back[0] - 1) / 2, py = (back[1] - 1) / 2;
  if (px < 0 || py < 0 || px >= shift / 2 || py >= shift / 2)
    throw std::domain_error("cell_unapply: cell outside the map's quadrant image");
  return {static_cast<std::int32_t>(px), static_cast<std::int32_t>(py), c.depth - 1};
}

}  // namespace detail

/// Order-k curve enumeration by recursive subdivision: the independent
/// geometric construction the arithmetic representation is checked against.
/// Proper curves compose the quadrant maps over the order-(k-1) Hilbert
/// sequence; improper curves compose over the order-(k-1) Liu4 sequence and
/// reverse the subsequence of every decorated quadrant. Order-2 improper
/// layouts are defined to be the Liu3 order-2 curve.
inline CellSequence enumerate_curve(CurveId nu, int k) {
  if (k < 1) throw std::invalid_argument("enumerate: order must be >= 1");
  if (nu.improper() && k < 2) throw std::invalid_argument("enumerate: improper curves need order >= 2");
  if (k > 12) throw std::invalid_argument("enumerate: order > 12 not supported (4^k cells)");
  if (nu.improper() && k == 2) {
    CellSequence seq = enumerate_curve(CurveId(4), 2);
    seq.curve = nu;
    return seq;
  }

  CellSequence seq{nu, k, {}};
  const CurveTable table = curve_table(nu);
  if (k == 1) {
    for (const AffineMap& p : table.maps) seq.cells.push_back(detail::cell_apply(p, Cell{0, 0, 0}));
    return seq;
  }

  const CellSequence base = enumerate_curve(table.base, k - 1);
  seq.cells.reserve(std::size_t{1} << (2 * k));
  for (const AffineMap& p : table.maps) {
    const std::size_t first = seq.cells.size();
    for (const Cell& c : base.cells) seq.cells.push_back(detail::cell_apply(p, c));
    if (p.reversed) std::reverse(seq.cells.begin() + static_cast<std::ptrdiff_t>(first), seq.cells.end());
  }
  return seq;
}

/// Depth-k quadrant-descent address of a cell, most significant digit first,
/// with the fixed geometric labeling 0=LL, 1=UL, 2=UR, 3=LR at every level.
inline std::vector<std::uint8_t> cell_address(const Cell& cell, int k) {
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) {
    const int bx = (cell.ix >> (k - 1 - s)) & 1;
    const int by = (cell.iy >> (k - 1 - s)) & 1;
    digits[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(bx ? (by ? 2 : 3) : (by ? 1 : 0));
  }
  return digits;
}

inline Cell cell_from_address(const std::vector<std::uint8_t>& digits) {
  std::int32_t ix = 0, iy = 0;
  for (std::uint8_t d : digits) {
    ix = 2 * ix + (d == 2 || d == 3 ? 1 : 0);
    iy = 2 * iy + (d == 1 || d == 2 ? 1 : 0);
  }
  return {ix, iy, static_cast<std::int32_t>(digits.size())};
}

/// Entry/exit boundary patterns: a fixed digit prefix followed by one
/// repeated digit out to the full order.
struct BoundaryPattern {
  std::vector<std::uint8_t> prefix;
  std::uint8_t tail = 0;

  std::vector<std::uint8_t> address(int k) const {
    std::vector<std::uint8_t> a = prefix;
    a.resize(static_cast<std::size_t>(k), tail);
    return a;
  }
};

struct BoundarySpec {
  BoundaryPattern entry, exit;
  std::optional<BoundaryPattern> mirror_entry, mirror_exit;  // mirror-reflected alternative
};

/// The published entry/exit boundary conditions for all twelve curves
/// (improper rows apply from order 3 on).
inline BoundarySpec boundary_spec(CurveId nu) {
  auto pat = [](std::vector<std::uint8_t> prefix, std::uint8_t tail) {
    return BoundaryPattern{std::move(prefix), tail};
  };
  switch (nu.nu) {
    case 0:  return {pat({0}, 0), pat({3}, 3), {}, {}};
    case 1:  return {pat({0}, 3), pat({3}, 0), {}, {}};
    case 2:  return {pat({0}, 2), pat({3}, 1), {}, {}};
    case 3:  return {pat({0}, 1), pat({3}, 2), {}, {}};
    case 4:  return {pat({0}, 0), pat({3}, 1), pat({0}, 2), pat({3}, 3)};
    case 5:  return {pat({0}, 1), pat({3}, 0), pat({0}, 3), pat({3}, 2)};
    case 6:  return {pat({0, 2}, 3), pat({3, 1}, 0), {}, {}};
    case 7:  return {pat({0, 2}, 3), pat({3, 3}, 2), pat({0, 0}, 1), pat({3, 1}, 0)};
    case 8:  return {pat({0, 0}, 1), pat({3, 3}, 2), {}, {}};
    case 9:  return {pat({0, 3}, 2), pat({3, 0}, 1), {}, {}};
    case 10: return {pat({0, 1}, 0), pat({3, 2}, 3), {}, {}};
    case 11: return {pat({0, 1}, 0), pat({3, 0}, 1), pat({0, 3}, 2), pat({3, 2}, 3)};
    default: throw std::invalid_argument("curve index must be 0..11");
  }
}

struct BoundaryCheck {
  bool pass = false;
  bool matched_mirror = false;  // matched the mirror-reflected column
  std::vector<std::uint8_t> entry_address, exit_address;
};

/// Checks the first/last cells of the enumerated curve against the published
/// boundary patterns (primary or mirror-reflected column). Proper curves from
/// order 2, improper from order 3.
inline BoundaryCheck check_boundary_conditions(CurveId nu, int k) {
  if (nu.proper() ? k < 2 : k < 3)
    throw std::invalid_argument("check_boundary_conditions: order too small for this curve");
  const CellSequence seq = enumerate_curve(nu, k);
  BoundaryCheck result;
  result.entry_address = cell_address(seq.cells.front(), k);
  result.exit_address = cell_address(seq.cells.back(), k);
  const BoundarySpec spec = boundary_spec(nu);
  if (result.entry_address == spec.entry.address(k) && result.exit_address == spec.exit.address(k)) {
    result.pass = true;
  } else if (spec.mirror_entry && result.entry_address == spec.mirror_entry->address(k) &&
             result.exit_address == spec.mirror_exit->address(k)) {
    result.pass = true;
    result.matched_mirror = true;
  }
  return result;
}

enum class ContactClass { Corner, Edge, Interior };

constexpr std::string_view contact_name(ContactClass c) {
  switch (c) {
    case ContactClass::Corner: return "corner";
    case ContactClass::Edge: return "edge";
    case ContactClass::Interior: return "interior";
  }
  return "?";
}

struct CurveProperties {
  bool mirror_symmetric = false;
  ContactClass entry_class = ContactClass::Interior;
  ContactClass exit_class = ContactClass::Interior;
  bool closed = false;

  friend constexpr bool operator==(const CurveProperties&, const CurveProperties&) = default;
};

/// Geometric classification of an order-k curve:
///  - mirror symmetry: reflecting every cell through the vertical center line
///    and reversing traversal order reproduces the sequence;
///  - entry/exit class from boundary contact of the first/last cell
///    (two perpendicular boundary edges = corner, one = edge, none = interior);
///  - closed: first and last cells share an edge.
/// Classes are stable from order 3 on.
inline CurveProperties classify_properties(CurveId nu, int k) {
  if (k < 3) throw std::invalid_argument("classify_properties: order must be >= 3");
  const CellSequence seq = enumerate_curve(nu, k);
  const std::int32_t n = std::int32_t{1} << k;

  bool mirror = true;
  const std::size_t total = seq.cells.size();
  for (std::size_t i = 0; i < total; ++i) {
    const Cell& a = seq.cells[i];
    const Cell& b = seq.cells[total - 1 - i];
    if (a.ix != n - 1 - b.ix || a.iy != b.iy) {
      mirror = false;
      break;
    }
  }

  auto contact = [n](const Cell& c) {
    const int touching = (c.ix == 0 || c.ix == n - 1 ? 1 : 0) + (c.iy == 0 || c.iy == n - 1 ? 1 : 0);
    return touching == 2 ? ContactClass::Corner
                         : (touching == 1 ? ContactClass::Edge : ContactClass::Interior);
  };
  const Cell& first = seq.cells.front();
  const Cell& last = seq.cells.back();
  const bool closed = std::abs(first.ix - last.ix) + std::abs(first.iy - last.iy) == 1;
  return {mirror, contact(first), contact(last), closed};
}

struct AdjacencyCheck {
  bool pass = true;
  std::optional<std::size_t> first_violation;  // index i where cells i, i+1 are not edge-adjacent
};

/// Verifies the adjacency condition: consecutive cells differ by exactly 1 in
/// exactly one lattice coordinate.
inline AdjacencyCheck check_adjacency(const CellSequence& seq) {
  for (std::size_t i = 0; i + 1 < seq.cells.size(); ++i) {
    const Cell& a = seq.cells[i];
    const Cell& b = seq.cells[i + 1];
    if (std::abs(a.ix - b.ix) + std::abs(a.iy - b.iy) != 1) return {false, i};
  }
  return {};
}

/// Parameter recovery: the digit string q with eval(nu, k, q) = center(cell),
/// found by quadrant descent (every quadrant map covers the quadrant matching
/// its own digit, so each level's digit is the current cell's top quadrant).
/// For improper curves the descent yields the post-reversion parameter, which
/// the final involution maps back.
inline QuaternaryFraction invert_point(CurveId nu, int k, const Cell& cell) {
  if (cell.depth != k || k < 1) throw std::invalid_argument("invert_point: cell depth must equal order");
  if (nu.improper() && k < 2) throw std::invalid_argument("invert_point: improper curves need order >= 2");
  if (nu.improper() && k == 2) return invert_point(CurveId(4), 2, cell);

  QuaternaryFraction q;
  q.digits.resize(static_cast<std::size_t>(k));
  Cell current = cell;
  for (int level = 0; level < k; ++level) {
    CurveId tables = nu;
    if (level >= 1) tables = nu.proper() ? CurveId(0) : (level == 1 ? CurveId(5) : CurveId(0));
    const std::uint8_t g = cell_address(current, k - level)[0];
    q.digits[static_cast<std::size_t>(level)] = g;
    current = detail::cell_unapply(quadrant_map(tables, g), current);
  }
  return nu.proper() ? q : reversal_transform(nu, k, q);
}

}  // namespace hhc
