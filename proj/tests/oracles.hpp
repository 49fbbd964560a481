#pragma once

// Test-only brute-force oracles, independent of the DP implementation paths
// they cross-check.

#include <random>
#include <set>
#include <vector>

#include "zslab/sequence.hpp"

namespace zslab::oracle {

/// All subset sums by direct 2^|S| enumeration: sums[k] = set of k-term
/// subsums, k in [0, |S|].
inline std::vector<std::set<Element>> enumerate_subsums(const Sequence& S) {
  auto items = expand(S);
  const std::size_t n = items.size();
  std::vector<std::set<Element>> sums(n + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Element acc = zero_of(S.spec);
    int bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        acc = add(S.spec, acc, items[i]);
        ++bits;
      }
    }
    sums[static_cast<std::size_t>(bits)].insert(acc);
  }
  return sums;
}

inline std::uint64_t count_zero_sum_subsets(const Sequence& S) {
  auto items = expand(S);
  const std::size_t n = items.size();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Element acc = zero_of(S.spec);
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) acc = add(S.spec, acc, items[i]);
    }
    if (is_zero(acc)) ++count;
  }
  return count;
}

inline bool zero_sumfree_direct(const Sequence& S) {
  return count_zero_sum_subsets(S) == 1;
}

inline Sequence random_sequence(const GroupSpec& spec, i64 length, std::mt19937_64& rng) {
  std::uniform_int_distribution<i64> pick(0, spec.order - 1);
  std::vector<Element> elems;
  for (i64 i = 0; i < length; ++i) elems.push_back(elem_at(spec, pick(rng)));
  return make_sequence(spec, elems);
}

/// Minimal sum of squares of residues assigned to s items, each residue value
/// j in [-(p-1)/2, (p-1)/2] used at most M times; greedy fill from |j| = 0
/// upward (optimal by exchange).
inline i64 min_square_assignment_greedy(i64 s, i64 M) {
  i64 v = 0, level = 0, remaining = s;
  while (remaining > 0) {
    i64 cap = (level == 0) ? M : 2 * M;
    i64 take = std::min(cap, remaining);
    v += take * level * level;
    remaining -= take;
    ++level;
  }
  return v;
}

/// Full-search variant for small s: enumerate how many items sit at each
/// |j| level.
inline i64 min_square_assignment_full(i64 s, i64 M) {
  // Levels 0..s suffice; recursion over levels.
  i64 best = -1;
  std::vector<i64> take;
  auto rec = [&](auto&& self, i64 level, i64 remaining, i64 acc) -> void {
    if (remaining == 0) {
      if (best < 0 || acc < best) best = acc;
      return;
    }
    if (level > s) return;
    i64 cap = std::min(remaining, (level == 0) ? M : 2 * M);
    for (i64 t = 0; t <= cap; ++t)
      self(self, level + 1, remaining - t, acc + t * level * level);
  };
  rec(rec, 0, s, 0);
  return best;
}

}  // namespace zslab::oracle
