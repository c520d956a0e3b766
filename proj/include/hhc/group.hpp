#pragma once

#include <array>
#include <string>
#include <vector>

#include "hhc/rotation.hpp"

namespace hhc {

/// One named check inside a structure report.
struct GroupAssertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct GroupReport {
  std::vector<GroupAssertion> assertions;
  bool all_passed() const {
    for (const auto& a : assertions)
      if (!a.passed) return false;
    return true;
  }
};

namespace detail {

// The published 8x8 multiplication table (row * column), frozen verbatim.
// Row/column order: U_I, U_R, -U_I, -U_R, U_V, U_H, -U_V, -U_H.
inline constexpr std::array<Rotation, 8> kTableOrder = {
    Rotation::I, Rotation::R, Rotation::NegI, Rotation::NegR,
    Rotation::V, Rotation::H, Rotation::NegV, Rotation::NegH};

inline constexpr Rotation I = Rotation::I, R = Rotation::R, nI = Rotation::NegI,
                          nR = Rotation::NegR, V = Rotation::V, H = Rotation::H,
                          nV = Rotation::NegV, nH = Rotation::NegH;

inline constexpr std::array<std::array<Rotation, 8>, 8> kPublishedProducts = {{
    {I, R, nI, nR, V, H, nV, nH},
    {R, I, nR, nI, H, V, nH, nV},
    {nI, nR, I, R, nV, nH, V, H},
    {nR, nI, R, I, nH, nV, H, V},
    {V, nH, nV, H, nI, R, I, nR},
    {H, nV, nH, V, nR, I, R, nI},
    {nV, H, V, nH, I, nR, nI, R},
    {nH, V, H, nV, R, nI, nR, I},
}};

inline bool subgroup_closed(const std::vector<Rotation>& elems) {
  auto contains = [&](Rotation r) {
    for (Rotation e : elems)
      if (e == r) return true;
    return false;
  };
  if (!contains(Rotation::I)) return false;
  for (Rotation a : elems)
    for (Rotation b : elems)
      if (!contains(rot_mul(a, b))) return false;
  return true;
}

}  // namespace detail

/// Checks the group structure of the eight rotation operators: closure,
/// identity, inverses, non-commutativity, the dihedral order profile
/// (order 8 with 5 elements of order 2 and 2 of order 4, i.e. the planar
/// point group 4mm), agreement with the published multiplication table,
/// and the published subgroup inventory (three of order 4, five of order 2).
inline GroupReport verify_group_structure() {
  GroupReport report;
  auto add = [&](std::string name, bool ok, std::string detail = "") {
    report.assertions.push_back({std::move(name), ok, std::move(detail)});
  };

  int closed = 0;
  for (Rotation a : kAllRotations)
    for (Rotation b : kAllRotations) {
      Rotation p = rot_mul(a, b);
      (void)p;  // rot_mul throws if the product leaves the 8-element set
      ++closed;
    }
  add("closure", closed == 64, std::to_string(closed) + "/64 products in the set");

  int table_matches = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (rot_mul(detail::kTableOrder[i], detail::kTableOrder[j]) ==
          detail::kPublishedProducts[i][j])
        ++table_matches;
  add("published multiplication table", table_matches == 64,
      std::to_string(table_matches) + "/64 entries agree");

  int identities = 0;
  for (Rotation e : kAllRotations) {
    bool is_id = true;
    for (Rotation a : kAllRotations)
      if (rot_mul(e, a) != a || rot_mul(a, e) != a) is_id = false;
    if (is_id) ++identities;
  }
  add("unique identity", identities == 1, std::to_string(identities) + " identity element(s)");

  bool inverses = true;
  for (Rotation a : kAllRotations)
    if (rot_mul(a, rot_inv(a)) != Rotation::I || rot_mul(rot_inv(a), a) != Rotation::I)
      inverses = false;
  add("all inverses present", inverses);

  const bool noncomm = rot_mul(Rotation::V, Rotation::R) != rot_mul(Rotation::R, Rotation::V);
  add("non-commutativity witness", noncomm, "U_V*U_R != U_R*U_V");

  int order2 = 0, order4 = 0, order1 = 0;
  for (Rotation a : kAllRotations) {
    switch (rot_order(a)) {
      case 1: ++order1; break;
      case 2: ++order2; break;
      case 4: ++order4; break;
      default: break;
    }
  }
  add("4mm element-order profile", order1 == 1 && order2 == 5 && order4 == 2,
      "1x order 1, " + std::to_string(order2) + "x order 2, " + std::to_string(order4) +
          "x order 4 (dihedral of order 8)");

  // Generators per the published presentation.
  {
    std::vector<Rotation> gen = {Rotation::R, Rotation::H};
    std::vector<Rotation> span = gen;
    bool grew = true;
    while (grew) {
      grew = false;
      for (Rotation a : span)
        for (Rotation b : span) {
          Rotation p = rot_mul(a, b);
          bool found = false;
          for (Rotation e : span)
            if (e == p) found = true;
          if (!found) {
            span.push_back(p);
            grew = true;
          }
        }
    }
    add("{U_R, U_H} generates the group", span.size() == 8,
        "span size " + std::to_string(span.size()));
  }

  using detail::subgroup_closed;
  add("order-4 subgroup {I,-I,R,-R} (2mm)",
      subgroup_closed({Rotation::I, Rotation::NegI, Rotation::R, Rotation::NegR}));
  add("order-4 subgroup {I,-I,H,-H} (2mm)",
      subgroup_closed({Rotation::I, Rotation::NegI, Rotation::H, Rotation::NegH}));
  add("order-4 subgroup {I,-I,V,-V} (cyclic 4)",
      subgroup_closed({Rotation::I, Rotation::NegI, Rotation::V, Rotation::NegV}) &&
          rot_order(Rotation::V) == 4);
  add("order-2 subgroup {I,R}", subgroup_closed({Rotation::I, Rotation::R}));
  add("order-2 subgroup {I,-R}", subgroup_closed({Rotation::I, Rotation::NegR}));
  add("order-2 subgroup {I,-I}", subgroup_closed({Rotation::I, Rotation::NegI}));
  add("order-2 subgroup {I,H}", subgroup_closed({Rotation::I, Rotation::H}));
  add("order-2 subgroup {I,-H}", subgroup_closed({Rotation::I, Rotation::NegH}));

  return report;
}

}  // namespace hhc
