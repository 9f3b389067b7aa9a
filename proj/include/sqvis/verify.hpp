#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sqvis/errors.hpp"
#include "sqvis/geometry.hpp"
#include "sqvis/ranking.hpp"
#include "sqvis/visibility.hpp"

namespace sqvis {

// Independent oracle for the coverage decision: same contract as
// uncovered_witness, computed by recursive subdivision instead of a
// candidate grid. The returned witness point may differ; only the
// Some/None verdict is required to agree.
//
// If a blocker contains all of r the answer is None; if no blocker meets
// r the lower-left corner is a witness. Otherwise some blocker boundary
// line lies strictly inside r's span; cutting there splits r into two
// closed parts (they share the cut line, which is sound for closed-set
// coverage) and the parts are searched left/bottom first. When every
// clipped blocker hugs r's boundary and none contains r, no cut exists,
// and the center of r is provably outside every blocker.
inline std::optional<Point> uncovered_witness_subdivision(
    const Rect& r, std::span<const Rect> blockers) {
  if (r.is_empty()) return std::nullopt;
  for (const Rect& b : blockers) {
    if (contains_rect(b, r)) return std::nullopt;
  }
  bool any_overlap = false;
  for (const Rect& b : blockers) {
    const Rect clip = intersect(b, r);
    if (clip.is_empty()) continue;
    any_overlap = true;
    // First clip bound strictly inside r decides the cut.
    if (r.x_lo() < clip.x_lo() && clip.x_lo() < r.x_hi()) {
      const Rect left(r.x_lo(), clip.x_lo(), r.y_lo(), r.y_hi());
      const Rect right(clip.x_lo(), r.x_hi(), r.y_lo(), r.y_hi());
      if (auto w = uncovered_witness_subdivision(left, blockers)) return w;
      return uncovered_witness_subdivision(right, blockers);
    }
    if (r.x_lo() < clip.x_hi() && clip.x_hi() < r.x_hi()) {
      const Rect left(r.x_lo(), clip.x_hi(), r.y_lo(), r.y_hi());
      const Rect right(clip.x_hi(), r.x_hi(), r.y_lo(), r.y_hi());
      if (auto w = uncovered_witness_subdivision(left, blockers)) return w;
      return uncovered_witness_subdivision(right, blockers);
    }
    if (r.y_lo() < clip.y_lo() && clip.y_lo() < r.y_hi()) {
      const Rect bottom(r.x_lo(), r.x_hi(), r.y_lo(), clip.y_lo());
      const Rect top(r.x_lo(), r.x_hi(), clip.y_lo(), r.y_hi());
      if (auto w = uncovered_witness_subdivision(bottom, blockers)) return w;
      return uncovered_witness_subdivision(top, blockers);
    }
    if (r.y_lo() < clip.y_hi() && clip.y_hi() < r.y_hi()) {
      const Rect bottom(r.x_lo(), r.x_hi(), r.y_lo(), clip.y_hi());
      const Rect top(r.x_lo(), r.x_hi(), clip.y_hi(), r.y_hi());
      if (auto w = uncovered_witness_subdivision(bottom, blockers)) return w;
      return uncovered_witness_subdivision(top, blockers);
    }
  }
  if (!any_overlap) return Point{r.x_lo(), r.y_lo()};
  // Every clip's bounds coincide with r's: a clip covering the center
  // would have to span both axes entirely, i.e. contain r.
  return Point{(r.x_lo() + r.x_hi()) / 2, (r.y_lo() + r.y_hi()) / 2};
}

inline std::optional<Point> uncovered_witness_subdivision(
    const Rect& r, const std::vector<Rect>& blockers) {
  return uncovered_witness_subdivision(r, std::span<const Rect>(blockers));
}

// Result of checking the straight-line embedding that places every square
// at its center. Plane iff no edge pair properly crosses and none was
// degenerate (collinear overlap, coincident endpoints).
struct CrossingReport {
  std::vector<std::pair<Edge, Edge>> crossings;
  std::vector<std::pair<Edge, Edge>> degenerate;

  bool plane() const { return crossings.empty() && degenerate.empty(); }
};

// Tests every pair of edges that do not share an endpoint index. Pairs
// sharing an endpoint are never crossings; unclassifiable pairs are listed
// in the report rather than thrown.
inline CrossingReport is_plane_embedding(const Instance& inst,
                                         const VisibilityGraph& g) {
  CrossingReport report;
  const auto& centers = inst.centers;
  for (std::size_t a = 0; a + 1 < g.edges.size(); ++a) {
    for (std::size_t b = a + 1; b < g.edges.size(); ++b) {
      const auto [i, j] = g.edges[a];
      const auto [k, l] = g.edges[b];
      if (i == k || i == l || j == k || j == l) continue;
      switch (classify_segments(centers.at(i), centers.at(j), centers.at(k),
                                centers.at(l))) {
        case SegmentRelation::proper_crossing:
          report.crossings.emplace_back(g.edges[a], g.edges[b]);
          break;
        case SegmentRelation::degenerate:
          report.degenerate.emplace_back(g.edges[a], g.edges[b]);
          break;
        case SegmentRelation::none:
          break;
      }
    }
  }
  return report;
}

// Maximum edge count of the lexicographic ranking's visibility graph:
// 3n-7 for n >= 4, with the small cases 0, 0, 1, 3.
inline std::size_t max_edges_bound(std::size_t n) {
  if (n <= 1) return 0;
  if (n == 2) return 1;
  if (n == 3) return 3;
  return 3 * n - 7;
}

// Minimum edge count over all n! rankings.
inline std::size_t exhaustive_min_edges(const Instance& inst,
                                        std::size_t cap = 9) {
  const std::size_t n = inst.size();
  if (n > cap) {
    throw TooLarge("exhaustive_min_edges: n=" + std::to_string(n) +
                   " exceeds cap=" + std::to_string(cap));
  }
  VisibilityOracle oracle(inst);
  Ranking rk = identity_ranking(n);
  std::size_t best = 0;
  bool have_best = false;
  do {
    const std::size_t count = oracle.count_edges(rk);
    if (!have_best || count < best) {
      best = count;
      have_best = true;
    }
  } while (std::next_permutation(rk.order.begin(), rk.order.end()));
  return best;
}

// Verdict of the "every ranking has at least `bound` edges" check.
// Exhaustive mode proves it; sampled mode checks the forced-edge count
// plus seeded random rankings and is evidence, not proof.
struct LowerBoundReport {
  bool exhaustive = false;
  std::size_t n = 0;
  std::size_t min_edges = 0;
  std::size_t bound = 0;
  std::optional<std::size_t> forced;        // sampled mode only
  std::optional<std::size_t> forced_floor;  // required forced count (2n-4)
  bool pass = false;
  std::optional<Ranking> counterexample;  // a ranking below the bound
  std::size_t counterexample_edges = 0;

  // Line-oriented serialization with a stable field order.
  std::string to_text() const {
    std::string out;
    out += "mode ";
    out += exhaustive ? "exhaustive" : "sampled";
    out += "\nn " + std::to_string(n);
    out += "\nmin_edges " + std::to_string(min_edges);
    out += "\nbound " + std::to_string(bound);
    if (forced) {
      out += "\nforced " + std::to_string(*forced);
      out += "\nforced_floor " + std::to_string(*forced_floor);
    }
    out += "\nverdict ";
    out += pass ? "pass" : "fail";
    out += "\n";
    if (counterexample) {
      out += "certificate ranking";
      for (std::size_t v : counterexample->order) out += " " + std::to_string(v);
      out += "\ncertificate edges " + std::to_string(counterexample_edges) + "\n";
    }
    return out;
  }
};

// For n <= exhaustive_cap, enumerates every ranking; otherwise requires
// |forced_edges| >= 2n-4 and checks `samples` seeded random rankings
// (seed, seed+1, ...). Any ranking below `bound` is reported as a
// counterexample certificate.
inline LowerBoundReport check_lower_bound(const Instance& inst, std::size_t bound,
                                          std::size_t samples, std::uint64_t seed,
                                          std::size_t exhaustive_cap = 8) {
  const std::size_t n = inst.size();
  LowerBoundReport report;
  report.n = n;
  report.bound = bound;
  if (n <= exhaustive_cap) {
    report.exhaustive = true;
    VisibilityOracle oracle(inst);
    Ranking rk = identity_ranking(n);
    bool have_min = false;
    do {
      const std::size_t count = oracle.count_edges(rk);
      if (!have_min || count < report.min_edges) {
        report.min_edges = count;
        have_min = true;
      }
      if (count < bound && !report.counterexample) {
        report.counterexample = rk;
        report.counterexample_edges = count;
      }
    } while (std::next_permutation(rk.order.begin(), rk.order.end()));
    report.pass = report.min_edges >= bound;
    return report;
  }

  report.exhaustive = false;
  report.forced = forced_edges(inst).size();
  report.forced_floor = n >= 2 ? 2 * n - 4 : 0;
  bool have_min = false;
  std::optional<VisibilityOracle> oracle;
  if (n <= VisibilityOracle::max_squares) oracle.emplace(inst);
  for (std::size_t s = 0; s < samples; ++s) {
    const Ranking rk = random_ranking(n, seed + s);
    const std::size_t count =
        oracle ? oracle->count_edges(rk) : visibility_graph(inst, rk).edges.size();
    if (!have_min || count < report.min_edges) {
      report.min_edges = count;
      have_min = true;
    }
    if (count < bound && !report.counterexample) {
      report.counterexample = rk;
      report.counterexample_edges = count;
    }
  }
  if (!have_min) report.min_edges = 0;
  report.pass = *report.forced >= *report.forced_floor &&
                (samples == 0 || report.min_edges >= bound);
  return report;
}

}  // namespace sqvis
