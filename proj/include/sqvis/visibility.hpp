#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sqvis/errors.hpp"
#include "sqvis/geometry.hpp"

namespace sqvis {

// Ordered set of unit-square centers; the input order is the identity.
// Duplicate centers are permitted.
struct Instance {
  std::vector<Point> centers;

  std::size_t size() const { return centers.size(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Permutation of square indices. Position t is height t: earlier entries
// are ranked lower in space.
struct Ranking {
  std::vector<std::size_t> order;

  std::size_t size() const { return order.size(); }

  friend bool operator==(const Ranking&, const Ranking&) = default;
};

inline bool is_permutation_of_n(const std::vector<std::size_t>& order,
                                std::size_t n) {
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t v : order) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

inline void require_valid_ranking(const Ranking& rk, std::size_t n) {
  if (!is_permutation_of_n(rk.order, n)) {
    throw InvalidRanking("ranking is not a permutation of 0.." +
                         std::to_string(n == 0 ? 0 : n - 1) + " (n=" +
                         std::to_string(n) + ")");
  }
}

// Unordered square-index pair, stored with the smaller index first.
using Edge = std::pair<std::size_t, std::size_t>;

inline Edge make_edge(std::size_t i, std::size_t k) {
  return i < k ? Edge{i, k} : Edge{k, i};
}

// Edge set of G(ranking): canonical pairs, sorted lexicographically.
struct VisibilityGraph {
  std::size_t n = 0;
  std::vector<Edge> edges;

  friend bool operator==(const VisibilityGraph&, const VisibilityGraph&) = default;
};

inline std::vector<Rect> square_bodies(const Instance& inst) {
  std::vector<Rect> bodies;
  bodies.reserve(inst.size());
  for (const Point& c : inst.centers) bodies.push_back(rect_of_square(c));
  return bodies;
}

struct EngineOptions {
  // Skip the coverage search when an intermediate center lies in the
  // rectangle spanned by the pair's centers; never changes the result.
  bool center_prefilter = true;
};

// True iff some square ranked strictly between positions s and t has its
// center inside the rectangle spanned by the two pair centers. Such a
// square's body contains the whole common region of the pair, so the pair
// is guaranteed not to be an edge.
inline bool blocked_by_intermediate_center(const Instance& inst, const Ranking& rk,
                                           std::size_t s, std::size_t t) {
  if (!(s < t && t < inst.size())) {
    throw std::out_of_range("blocked_by_intermediate_center: bad rank positions");
  }
  const Point& ci = inst.centers.at(rk.order.at(s));
  const Point& ck = inst.centers.at(rk.order.at(t));
  const Rect span = spanned_rect(ci, ck);
  for (std::size_t u = s + 1; u < t; ++u) {
    if (contains(span, inst.centers.at(rk.order.at(u)))) return true;
  }
  return false;
}

namespace detail {

inline bool pair_sees_impl(const std::vector<Point>& centers,
                           const std::vector<Rect>& bodies,
                           const std::vector<std::size_t>& order, std::size_t s,
                           std::size_t t, const EngineOptions& opts) {
  const std::size_t i = order[s];
  const std::size_t k = order[t];
  const Rect common = intersect(bodies[i], bodies[k]);
  if (common.is_empty()) return false;
  if (opts.center_prefilter) {
    const Rect span = spanned_rect(centers[i], centers[k]);
    for (std::size_t u = s + 1; u < t; ++u) {
      if (contains(span, centers[order[u]])) return false;
    }
  }
  std::vector<Rect> blockers;
  blockers.reserve(t - s - 1);
  for (std::size_t u = s + 1; u < t; ++u) blockers.push_back(bodies[order[u]]);
  return uncovered_witness(common, blockers).has_value();
}

}  // namespace detail

// The square at rank position s sees the one at position t (s < t): some
// point of their common body region lies in no square ranked strictly
// between them.
inline bool pair_sees(const Instance& inst, const Ranking& rk, std::size_t s,
                      std::size_t t, const EngineOptions& opts = {}) {
  if (!(s < t && t < inst.size())) {
    throw std::out_of_range("pair_sees: bad rank positions");
  }
  for (std::size_t u = s; u <= t; ++u) {
    if (rk.order.at(u) >= inst.size()) {
      throw std::out_of_range("pair_sees: ranking entry out of range");
    }
  }
  const std::vector<Rect> bodies = square_bodies(inst);
  return detail::pair_sees_impl(inst.centers, bodies, rk.order, s, t, opts);
}

inline VisibilityGraph visibility_graph(const Instance& inst, const Ranking& rk,
                                        const EngineOptions& opts = {}) {
  const std::size_t n = inst.size();
  require_valid_ranking(rk, n);
  const std::vector<Rect> bodies = square_bodies(inst);
  VisibilityGraph g{n, {}};
  for (std::size_t t = 1; t < n; ++t) {
    for (std::size_t s = 0; s < t; ++s) {
      if (detail::pair_sees_impl(inst.centers, bodies, rk.order, s, t, opts)) {
        g.edges.push_back(make_edge(rk.order[s], rk.order[t]));
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// Pairs whose common region keeps an uncovered point even with every other
// square of the instance acting as a blocker. Such a pair is an edge under
// every ranking: only squares ranked between the two can block, and none
// of them contains the witness. This is a sufficient condition for a
// ranking-independent edge, not a necessary one.
inline std::vector<Edge> forced_edges(const Instance& inst) {
  const std::size_t n = inst.size();
  const std::vector<Rect> bodies = square_bodies(inst);
  std::vector<Edge> result;
  std::vector<Rect> blockers;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      const Rect common = intersect(bodies[i], bodies[k]);
      if (common.is_empty()) continue;
      blockers.clear();
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && j != k) blockers.push_back(bodies[j]);
      }
      if (uncovered_witness(common, blockers).has_value()) {
        result.emplace_back(i, k);
      }
    }
  }
  return result;  // loop order is already lexicographic
}

// Memoizing engine for enumerating many rankings of one instance.
//
// Whether square i sees square k depends only on the *set* of squares
// ranked strictly between them, not on their order, so the coverage
// result can be cached per (pair, between-set). Blockers whose body does
// not meet the pair's common region are dropped from the key, and a
// blocker that alone contains the region answers immediately, which keeps
// the cache small and hot across permutations. Limited to 64 squares by
// the bitmask representation.
class VisibilityOracle {
 public:
  static constexpr std::size_t max_squares = 64;

  explicit VisibilityOracle(const Instance& inst) : n_(inst.size()) {
    if (n_ > max_squares) {
      throw TooLarge("VisibilityOracle: more than 64 squares");
    }
    bodies_ = square_bodies(inst);
    const std::size_t pairs = n_ < 2 ? 0 : n_ * (n_ - 1) / 2;
    pair_rect_.reserve(pairs);
    cover_mask_.assign(pairs, 0);
    relevant_mask_.assign(pairs, 0);
    memo_.resize(pairs);
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      for (std::size_t k = i + 1; k < n_; ++k) {
        const std::size_t p = pair_rect_.size();
        pair_rect_.push_back(intersect(bodies_[i], bodies_[k]));
        if (pair_rect_[p].is_empty()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          if (j == i || j == k) continue;
          if (contains_rect(bodies_[j], pair_rect_[p])) {
            cover_mask_[p] |= std::uint64_t{1} << j;
          } else if (intersects(bodies_[j], pair_rect_[p])) {
            relevant_mask_[p] |= std::uint64_t{1} << j;
          }
        }
      }
    }
  }

  std::size_t size() const { return n_; }

  // Does i see k when exactly the squares in `between` are ranked between
  // them? Equivalent to the uncovered-point search on the pair's common
  // region with those squares as blockers.
  bool sees(std::size_t i, std::size_t k, std::uint64_t between) {
    const std::size_t p = pair_index(i, k);
    if (pair_rect_[p].is_empty()) return false;
    if (between & cover_mask_[p]) return false;
    const std::uint64_t mask = between & relevant_mask_[p];
    if (mask == 0) return true;
    auto [it, inserted] = memo_[p].try_emplace(mask, false);
    if (inserted) {
      std::vector<Rect> blockers;
      for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        blockers.push_back(bodies_[std::countr_zero(bits)]);
      }
      it->second = uncovered_witness(pair_rect_[p], blockers).has_value();
    }
    return it->second;
  }

  std::size_t count_edges(const Ranking& rk) {
    require_valid_ranking(rk, n_);
    prefix_masks(rk);
    std::size_t count = 0;
    for (std::size_t t = 1; t < n_; ++t) {
      for (std::size_t s = 0; s < t; ++s) {
        const std::uint64_t between = prefix_[t] & ~prefix_[s + 1];
        if (sees(rk.order[s], rk.order[t], between)) ++count;
      }
    }
    return count;
  }

  VisibilityGraph graph(const Ranking& rk) {
    require_valid_ranking(rk, n_);
    prefix_masks(rk);
    VisibilityGraph g{n_, {}};
    for (std::size_t t = 1; t < n_; ++t) {
      for (std::size_t s = 0; s < t; ++s) {
        const std::uint64_t between = prefix_[t] & ~prefix_[s + 1];
        if (sees(rk.order[s], rk.order[t], between)) {
          g.edges.push_back(make_edge(rk.order[s], rk.order[t]));
        }
      }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
  }

 private:
  std::size_t pair_index(std::size_t i, std::size_t k) const {
    if (i > k) std::swap(i, k);
    return i * n_ - i * (i + 1) / 2 + (k - i - 1);
  }

  // prefix_[u] = bitmask of the squares at rank positions < u.
  void prefix_masks(const Ranking& rk) {
    prefix_.assign(n_ + 1, 0);
    for (std::size_t u = 0; u < n_; ++u) {
      prefix_[u + 1] = prefix_[u] | (std::uint64_t{1} << rk.order[u]);
    }
  }

  std::size_t n_;
  std::vector<Rect> bodies_;
  std::vector<Rect> pair_rect_;
  std::vector<std::uint64_t> cover_mask_;
  std::vector<std::uint64_t> relevant_mask_;
  std::vector<std::unordered_map<std::uint64_t, bool>> memo_;
  std::vector<std::uint64_t> prefix_;
};

}  // namespace sqvis
