#pragma once

#include <algorithm>
#include <cstdio>
#include <string>

#include "sqvis/errors.hpp"
#include "sqvis/geometry.hpp"
#include "sqvis/rational.hpp"
#include "sqvis/visibility.hpp"

namespace sqvis {

namespace detail {

// Fixed-point decimal with up to three fractional digits (round half up),
// computed in exact integer arithmetic so output bytes are stable.
inline std::string svg_number(const Rational& value) {
  const Rational scaled = value * 1000 + Rational(1, 2);
  Integer q = numerator(scaled) / denominator(scaled);
  if (numerator(scaled) < 0 && q * denominator(scaled) != numerator(scaled)) --q;
  const bool negative = q < 0;
  Integer a = negative ? Integer(-q) : q;
  const Integer whole = a / 1000;
  const auto frac = static_cast<unsigned>(a % 1000);
  std::string out = negative ? "-" : "";
  out += whole.str();
  if (frac != 0) {
    char buf[8];
    std::snprintf(buf, sizeof buf, ".%03u", frac % 1000);
    std::string f(buf);
    while (f.back() == '0') f.pop_back();
    out += f;
  }
  return out;
}

}  // namespace detail

// Upward view on the stack: the rendering paints squares in reverse rank
// order, so the lowest-ranked square is painted last and ends on top,
// closest to the viewer looking up from below. Every square carries its
// rank position (0 = lowest) as a label. The optional overlay draws the
// straight-line embedding: one segment per edge between the two centers.
//
// Fixed scale of 64 svg units per coordinate unit; the viewport is the
// bounding box of all square bodies plus a 10% margin per axis. Output is
// deterministic byte for byte.
inline std::string render_svg(const Instance& inst, const Ranking& rk,
                              const VisibilityGraph* overlay = nullptr) {
  const std::size_t n = inst.size();
  require_valid_ranking(rk, n);
  if (overlay != nullptr && overlay->n != n) {
    throw BadParams("render_svg: graph size does not match the instance");
  }

  std::string body;
  const Rational scale = 64;
  Rational width = scale;
  Rational height = scale;
  if (n > 0) {
    Rational min_x = inst.centers[0].x, max_x = min_x;
    Rational min_y = inst.centers[0].y, max_y = min_y;
    for (const Point& c : inst.centers) {
      min_x = std::min(min_x, c.x);
      max_x = std::max(max_x, c.x);
      min_y = std::min(min_y, c.y);
      max_y = std::max(max_y, c.y);
    }
    min_x -= 1;
    max_x += 1;
    min_y -= 1;
    max_y += 1;
    const Rational margin_x = (max_x - min_x) / 10;
    const Rational margin_y = (max_y - min_y) / 10;
    const Rational origin_x = min_x - margin_x;
    const Rational top_y = max_y + margin_y;
    width = (max_x - min_x + 2 * margin_x) * scale;
    height = (max_y - min_y + 2 * margin_y) * scale;
    // y grows downward in svg; flip around the viewport top.
    auto sx = [&](const Rational& x) { return (x - origin_x) * scale; };
    auto sy = [&](const Rational& y) { return (top_y - y) * scale; };

    for (std::size_t pos = n; pos-- > 0;) {
      const Point& c = inst.centers[rk.order[pos]];
      body += "<rect x=\"" + detail::svg_number(sx(c.x - 1)) + "\" y=\"" +
              detail::svg_number(sy(c.y + 1)) +
              "\" width=\"128\" height=\"128\" fill=\"#5b8bd0\" "
              "fill-opacity=\"0.35\" stroke=\"#1f3a66\" stroke-width=\"1.5\"/>\n";
      body += "<text x=\"" + detail::svg_number(sx(c.x)) + "\" y=\"" +
              detail::svg_number(sy(c.y)) +
              "\" font-family=\"monospace\" font-size=\"28\" "
              "text-anchor=\"middle\" dominant-baseline=\"central\" "
              "fill=\"#10233f\">" +
              std::to_string(pos) + "</text>\n";
    }
    if (overlay != nullptr) {
      for (const Edge& e : overlay->edges) {
        const Point& a = inst.centers[e.first];
        const Point& b = inst.centers[e.second];
        body += "<line x1=\"" + detail::svg_number(sx(a.x)) + "\" y1=\"" +
                detail::svg_number(sy(a.y)) + "\" x2=\"" +
                detail::svg_number(sx(b.x)) + "\" y2=\"" +
                detail::svg_number(sy(b.y)) +
                "\" stroke=\"#c03030\" stroke-width=\"2\"/>\n";
      }
      for (const Point& c : inst.centers) {
        body += "<circle cx=\"" + detail::svg_number(sx(c.x)) + "\" cy=\"" +
                detail::svg_number(sy(c.y)) + "\" r=\"4\" fill=\"#601010\"/>\n";
      }
    }
  }

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " +
         detail::svg_number(width) + " " + detail::svg_number(height) +
         "\" width=\"" + detail::svg_number(width) + "\" height=\"" +
         detail::svg_number(height) + "\">\n";
  out += body;
  out += "</svg>\n";
  return out;
}

}  // namespace sqvis
