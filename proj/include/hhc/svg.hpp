#pragma once

#include <string>

#include "hhc/geom.hpp"

namespace hhc {

/// SVG plot of an order-k curve: a polyline through the cell centers in a
/// unit viewBox, a circle marking the entry point and an arrowhead marking
/// the exit point. Every coordinate is a dyadic rational printed as its exact
/// terminating decimal, so output bytes are identical across runs.
/// The y axis is flipped (SVG grows downward) so plots read like the usual
/// mathematical orientation.
inline std::string svg_document(const CellSequence& seq) {
  const int k = seq.order;
  const DyadicScalar one(1, 0);
  auto px = [&](const DyadicVec2& p) { return p.x.to_decimal_string(); };
  auto py = [&](const DyadicVec2& p) { return (one - p.y).to_decimal_string(); };

  const std::string stroke = DyadicScalar(1, k + 1).to_decimal_string();
  const std::string marker = DyadicScalar(1, k + 2).to_decimal_string();

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\">\n";
  out += "<!-- " + std::string(seq.curve.name()) + " curve, order " + std::to_string(k) + " -->\n";
  out += "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"" + stroke + "\" points=\"";
  for (std::size_t i = 0; i < seq.cells.size(); ++i) {
    if (i) out += " ";
    const DyadicVec2 c = seq.cells[i].center();
    out += px(c) + "," + py(c);
  }
  out += "\"/>\n";

  const DyadicVec2 entry = seq.cells.front().center();
  out += "<circle cx=\"" + px(entry) + "\" cy=\"" + py(entry) + "\" r=\"" + marker +
         "\" fill=\"#000000\"/>\n";

  // Arrowhead at the exit, oriented along the final segment.
  const DyadicVec2 last = seq.cells.back().center();
  const DyadicVec2 prev = seq.cells[seq.cells.size() - 2].center();
  const DyadicVec2 dir = last - prev;  // one coordinate +-1/2^k, the other 0
  const DyadicScalar r(1, k + 2);
  auto step = [&](DyadicScalar d) {
    if (d.is_zero()) return DyadicScalar();
    return d > DyadicScalar() ? r : -r;
  };
  const DyadicScalar fx = step(dir.x), fy = step(dir.y);
  const DyadicVec2 tip{last.x + fx, last.y + fy};
  const DyadicVec2 base1{last.x - fy, last.y + fx};  // perpendicular offsets
  const DyadicVec2 base2{last.x + fy, last.y - fx};
  out += "<polygon fill=\"#000000\" points=\"" + px(tip) + "," + py(tip) + " " + px(base1) + "," +
         py(base1) + " " + px(base2) + "," + py(base2) + "\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace hhc
