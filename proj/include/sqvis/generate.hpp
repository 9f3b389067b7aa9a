#pragma once

#include <cstdint>
#include <set>
#include <utility>

#include "sqvis/errors.hpp"
#include "sqvis/ranking.hpp"
#include "sqvis/rng.hpp"
#include "sqvis/visibility.hpp"

namespace sqvis {

// Worst-case construction: a diagonal staircase bunch of n-2 squares with
// pitch delta, flanked by one special square up-left and one down-right.
// Every (special, bunch) pair keeps a privately visible point no matter
// how the squares are ranked, and together with the consecutive-bunch
// visibilities the instance admits no ranking below 3n-7 edges. The
// staircase extent (n-3)*delta must stay at most 1/2 so the specials
// reach every bunch square.
//
// Index layout: bunch squares 0..n-3 in staircase order, then the up-left
// special, then the down-right special.
inline Instance lower_bound_instance(std::size_t n, const Rational& delta) {
  if (n < 4) throw BadParams("lower_bound_instance: n must be at least 4");
  if (delta <= 0) throw BadParams("lower_bound_instance: delta must be positive");
  const Rational extent = Rational(static_cast<unsigned>(n - 3)) * delta;
  if (extent * 2 > 1) {
    throw BadParams("lower_bound_instance: (n-3)*delta must be at most 1/2");
  }
  Instance inst;
  inst.centers.reserve(n);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const Rational v = Rational(static_cast<unsigned>(i)) * delta;
    inst.centers.push_back({v, v});
  }
  const Rational half = extent / 2;
  inst.centers.push_back({half - 1, half + 1});
  inst.centers.push_back({half + 1, half - 1});
  return inst;
}

struct QuadraticInstance {
  Instance instance;
  // Stacking all lower squares below all upper squares makes every
  // (lower, upper) pair an edge; this is the returned "many edges"
  // ranking (the input order itself).
  Ranking stacked_ranking;
};

// Two overlapping rows: m = floor(n/2) lower squares marching right along
// y = 0 and m upper squares marching down along x = delta, offset so every
// lower square meets every upper square. Under the stacked ranking each of
// the m^2 cross pairs keeps an uncovered point; the lexicographic ranking
// of the same instance stays within the linear bound. Odd n appends one
// far-away filler square so the m^2 statement stays clean.
inline QuadraticInstance quadratic_instance(std::size_t n, const Rational& delta) {
  if (n < 2) throw BadParams("quadratic_instance: n must be at least 2");
  if (delta <= 0) throw BadParams("quadratic_instance: delta must be positive");
  if (delta * Rational(static_cast<unsigned>(n + 2)) > 1) {
    throw BadParams("quadratic_instance: delta must be at most 1/(n+2)");
  }
  const std::size_t m = n / 2;
  const Rational top = 2 - Rational(static_cast<unsigned>(n + 2)) * delta;
  Instance inst;
  inst.centers.reserve(n);
  for (std::size_t i = 1; i <= m; ++i) {
    inst.centers.push_back({Rational(static_cast<unsigned>(i)) * delta, 0});
  }
  for (std::size_t j = 1; j <= m; ++j) {
    inst.centers.push_back({delta, top - Rational(static_cast<unsigned>(j)) * delta});
  }
  if (n % 2 == 1) inst.centers.push_back({100, 100});
  return {std::move(inst), identity_ranking(n)};
}

// n distinct centers drawn uniformly from the rational grid of pitch 1/64
// over [0, span]^2, deterministically from the seed. Duplicate draws are
// rejected and redrawn, so the result always has distinct centers.
inline Instance random_instance(std::size_t n, const Rational& span,
                                std::uint64_t seed) {
  if (span <= 0) throw BadParams("random_instance: span must be positive");
  const Rational scaled = span * 64;
  const Integer k_max = numerator(scaled) / denominator(scaled);  // floor, span > 0
  if (k_max > Integer(1) << 32) {
    throw BadParams("random_instance: span too large");
  }
  const auto grid = static_cast<std::uint64_t>(k_max) + 1;
  if (Integer(grid) * grid < n) {
    throw BadParams("random_instance: n exceeds the number of distinct grid points");
  }
  SplitMix64 rng(seed);
  std::set<std::pair<std::uint64_t, std::uint64_t>> used;
  Instance inst;
  inst.centers.reserve(n);
  while (inst.centers.size() < n) {
    const std::uint64_t kx = rng.below(grid);
    const std::uint64_t ky = rng.below(grid);
    if (!used.emplace(kx, ky).second) continue;
    inst.centers.push_back({Rational(kx, 64), Rational(ky, 64)});
  }
  return inst;
}

}  // namespace sqvis
