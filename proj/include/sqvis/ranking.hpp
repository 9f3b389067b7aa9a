#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "sqvis/errors.hpp"
#include "sqvis/rng.hpp"
#include "sqvis/visibility.hpp"

namespace sqvis {

// The input order itself.
inline Ranking identity_ranking(std::size_t n) {
  Ranking rk;
  rk.order.resize(n);
  for (std::size_t i = 0; i < n; ++i) rk.order[i] = i;
  return rk;
}

// Sorts indices by center, x first then y, ascending. Duplicate centers
// keep their input order, so the result is deterministic.
inline Ranking lex_ranking(const Instance& inst) {
  Ranking rk = identity_ranking(inst.size());
  std::stable_sort(rk.order.begin(), rk.order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return lex_less(inst.centers[a], inst.centers[b]);
                   });
  return rk;
}

// Fisher-Yates shuffle of the identity, driven by splitmix64 with
// rejection-sampled bounds. Same (n, seed) always yields the same
// permutation; regression tests pin outputs, so the scheme is frozen.
inline Ranking random_ranking(std::size_t n, std::uint64_t seed) {
  Ranking rk = identity_ranking(n);
  SplitMix64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(rk.order[i - 1], rk.order[j]);
  }
  return rk;
}

struct OptimalRanking {
  Ranking ranking;
  std::size_t edge_count = 0;
};

// Enumerates all n! rankings in lexicographic order over order sequences
// and returns the first one attaining the minimum edge count, so ties
// break toward the lexicographically smallest sequence.
inline OptimalRanking optimal_ranking(const Instance& inst, std::size_t cap = 9) {
  const std::size_t n = inst.size();
  if (n > cap) {
    throw TooLarge("optimal_ranking: n=" + std::to_string(n) +
                   " exceeds cap=" + std::to_string(cap));
  }
  VisibilityOracle oracle(inst);
  Ranking rk = identity_ranking(n);
  OptimalRanking best;
  bool have_best = false;
  do {
    const std::size_t count = oracle.count_edges(rk);
    if (!have_best || count < best.edge_count) {
      best = {rk, count};
      have_best = true;
    }
  } while (std::next_permutation(rk.order.begin(), rk.order.end()));
  return best;
}

}  // namespace sqvis
