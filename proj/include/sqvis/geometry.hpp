#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sqvis/errors.hpp"
#include "sqvis/rational.hpp"

namespace sqvis {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

// (x, y) lexicographic order on points.
inline bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

// Closed axis-aligned box [x_lo,x_hi] x [y_lo,y_hi]. Degenerate boxes
// (segments, points) are ordinary values; the empty set is a distinct
// state. Closed-set semantics throughout: boxes that merely touch still
// intersect.
class Rect {
 public:
  Rect() = default;  // the empty set

  Rect(Rational x_lo, Rational x_hi, Rational y_lo, Rational y_hi)
      : empty_(false),
        x_lo_(std::move(x_lo)),
        x_hi_(std::move(x_hi)),
        y_lo_(std::move(y_lo)),
        y_hi_(std::move(y_hi)) {
    if (x_lo_ > x_hi_ || y_lo_ > y_hi_) {
      throw std::invalid_argument("Rect: bounds out of order");
    }
  }

  static Rect empty() { return Rect{}; }

  bool is_empty() const { return empty_; }

  // Bounds are meaningful only on non-empty rects.
  const Rational& x_lo() const { return x_lo_; }
  const Rational& x_hi() const { return x_hi_; }
  const Rational& y_lo() const { return y_lo_; }
  const Rational& y_hi() const { return y_hi_; }

  friend bool operator==(const Rect& a, const Rect& b) {
    if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
    return a.x_lo_ == b.x_lo_ && a.x_hi_ == b.x_hi_ && a.y_lo_ == b.y_lo_ &&
           a.y_hi_ == b.y_hi_;
  }

 private:
  bool empty_ = true;
  Rational x_lo_, x_hi_, y_lo_, y_hi_;
};

// Body of the unit square centered at c: the closed L-inf ball of radius 1.
inline Rect rect_of_square(const Point& c) {
  return Rect(c.x - 1, c.x + 1, c.y - 1, c.y + 1);
}

inline Rect intersect(const Rect& a, const Rect& b) {
  if (a.is_empty() || b.is_empty()) return Rect::empty();
  Rational x_lo = std::max(a.x_lo(), b.x_lo());
  Rational x_hi = std::min(a.x_hi(), b.x_hi());
  Rational y_lo = std::max(a.y_lo(), b.y_lo());
  Rational y_hi = std::min(a.y_hi(), b.y_hi());
  if (x_lo > x_hi || y_lo > y_hi) return Rect::empty();
  return Rect(std::move(x_lo), std::move(x_hi), std::move(y_lo), std::move(y_hi));
}

inline bool contains(const Rect& r, const Point& p) {
  if (r.is_empty()) return false;
  return r.x_lo() <= p.x && p.x <= r.x_hi() && r.y_lo() <= p.y && p.y <= r.y_hi();
}

// inner as a set is contained in outer; the empty set is contained in anything.
inline bool contains_rect(const Rect& outer, const Rect& inner) {
  if (inner.is_empty()) return true;
  if (outer.is_empty()) return false;
  return outer.x_lo() <= inner.x_lo() && inner.x_hi() <= outer.x_hi() &&
         outer.y_lo() <= inner.y_lo() && inner.y_hi() <= outer.y_hi();
}

inline bool intersects(const Rect& a, const Rect& b) {
  return !intersect(a, b).is_empty();
}

// Smallest axis-aligned rectangle containing both points. Symmetric.
inline Rect spanned_rect(const Point& a, const Point& b) {
  return Rect(std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y),
              std::max(a.y, b.y));
}

namespace detail {

// Augmented grid axis: position 2t is coords[t], position 2t+1 the exact
// midpoint of coords[t] and coords[t+1].
inline Rational axis_value(const std::vector<Rational>& coords, std::size_t q) {
  if (q % 2 == 0) return coords[q / 2];
  return (coords[q / 2] + coords[q / 2 + 1]) / 2;
}

}  // namespace detail

// Searches the closed rectangle r for a point outside every blocker.
//
// Candidate points: clip every blocker to r and drop empty clips; the
// sorted deduplicated clip bounds together with r's own bounds form a grid
// on each axis, augmented with the midpoint of every consecutive pair.
// Coverage by closed rectangles is constant on each open cell interior,
// open edge segment and vertex of that grid, and the candidate set meets
// every such piece, so scanning the candidates decides coverage of all
// of r. Candidates are scanned ascending in x, then ascending in y, and
// the first uncovered one is returned, which makes the witness (and every
// output derived from it) reproducible byte for byte.
//
// All clip bounds are members of the coordinate arrays, so after the
// rational sort the per-candidate coverage tests reduce to integer index
// comparisons: a blocker whose clipped bounds sit at indices [lo, hi]
// covers augmented position q iff 2*lo <= q <= 2*hi.
inline std::optional<Point> uncovered_witness(const Rect& r,
                                              std::span<const Rect> blockers) {
  if (r.is_empty()) return std::nullopt;

  std::vector<Rect> clips;
  clips.reserve(blockers.size());
  for (const Rect& b : blockers) {
    Rect c = intersect(b, r);
    if (c.is_empty()) continue;
    if (c == r) return std::nullopt;  // one blocker covers all of r
    clips.push_back(std::move(c));
  }

  std::vector<Rational> xs{r.x_lo(), r.x_hi()};
  std::vector<Rational> ys{r.y_lo(), r.y_hi()};
  xs.reserve(2 + 2 * clips.size());
  ys.reserve(2 + 2 * clips.size());
  for (const Rect& c : clips) {
    xs.push_back(c.x_lo());
    xs.push_back(c.x_hi());
    ys.push_back(c.y_lo());
    ys.push_back(c.y_hi());
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  auto index_of = [](const std::vector<Rational>& coords, const Rational& value) {
    return static_cast<std::size_t>(
        std::lower_bound(coords.begin(), coords.end(), value) - coords.begin());
  };
  struct IndexBox {
    std::size_t x_lo, x_hi, y_lo, y_hi;
  };
  std::vector<IndexBox> boxes;
  boxes.reserve(clips.size());
  for (const Rect& c : clips) {
    boxes.push_back({2 * index_of(xs, c.x_lo()), 2 * index_of(xs, c.x_hi()),
                     2 * index_of(ys, c.y_lo()), 2 * index_of(ys, c.y_hi())});
  }

  const std::size_t nx = 2 * xs.size() - 1;
  const std::size_t ny = 2 * ys.size() - 1;
  std::vector<int> depth_delta(ny + 1);
  for (std::size_t qx = 0; qx < nx; ++qx) {
    std::fill(depth_delta.begin(), depth_delta.end(), 0);
    for (const IndexBox& b : boxes) {
      if (b.x_lo <= qx && qx <= b.x_hi) {
        ++depth_delta[b.y_lo];
        --depth_delta[b.y_hi + 1];
      }
    }
    int depth = 0;
    for (std::size_t qy = 0; qy < ny; ++qy) {
      depth += depth_delta[qy];
      if (depth == 0) {
        return Point{detail::axis_value(xs, qx), detail::axis_value(ys, qy)};
      }
    }
  }
  return std::nullopt;
}

inline std::optional<Point> uncovered_witness(const Rect& r,
                                              const std::vector<Rect>& blockers) {
  return uncovered_witness(r, std::span<const Rect>(blockers));
}

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn,
// 0 collinear. Exact.
inline int orientation(const Point& a, const Point& b, const Point& c) {
  const Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return cross.sign();
}

enum class SegmentRelation {
  none,             // disjoint, endpoint touch, or T-junction
  proper_crossing,  // exactly one common point, interior to both segments
  degenerate,       // zero-length segment or collinear overlap
};

// Classifies the closed segments ab and cd. A proper crossing is a single
// intersection point interior to both segments; touching at an endpoint is
// not a crossing. Zero-length segments and collinear pairs sharing more
// than one point cannot be classified either way and are reported as
// degenerate so callers can decide policy.
inline SegmentRelation classify_segments(const Point& a, const Point& b,
                                         const Point& c, const Point& d) {
  if (a == b || c == d) return SegmentRelation::degenerate;
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 != 0 || o2 != 0 || o3 != 0 || o4 != 0) {
    if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentRelation::proper_crossing;
    // Any zero orientation puts an endpoint on the other supporting line,
    // so the intersection (if any) is an endpoint of one segment.
    return SegmentRelation::none;
  }
  // All four points collinear. Project on the dominant axis and compare the
  // closed 1D intervals: more than one shared point is degenerate, a single
  // shared point is an endpoint touch.
  const bool use_y = a.x == b.x;
  auto key = [&](const Point& p) { return use_y ? p.y : p.x; };
  const Rational lo1 = std::min(key(a), key(b));
  const Rational hi1 = std::max(key(a), key(b));
  const Rational lo2 = std::min(key(c), key(d));
  const Rational hi2 = std::max(key(c), key(d));
  if (std::max(lo1, lo2) < std::min(hi1, hi2)) return SegmentRelation::degenerate;
  return SegmentRelation::none;
}

// Boolean form of classify_segments; degenerate configurations are
// surfaced through the error channel instead of being classified.
inline bool segments_properly_cross(const Point& a, const Point& b,
                                    const Point& c, const Point& d) {
  switch (classify_segments(a, b, c, d)) {
    case SegmentRelation::proper_crossing:
      return true;
    case SegmentRelation::none:
      return false;
    case SegmentRelation::degenerate:
      break;
  }
  throw DegenerateCrossing(
      "segments are collinear with a shared stretch or have zero length");
}

}  // namespace sqvis
