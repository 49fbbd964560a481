#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "zslab/sequence.hpp"

namespace zslab {

/// Memory guard for reachability tables, in bytes. Reads ZSLAB_MEM_CAP from
/// the environment once; defaults to 256 MiB.
std::size_t memory_cap();

/// Layered reachability: reach(c, g) is true iff some sub-multiset of
/// cardinality c sums to g. Layer 0 contains only the zero element.
struct SubsumTable {
  GroupSpec spec;
  i64 s = 0;
  std::vector<std::vector<char>> reach;  // (s+1) x order

  bool at(i64 c, i64 gidx) const { return reach[static_cast<std::size_t>(c)][static_cast<std::size_t>(gidx)] != 0; }
};

/// Throws MemoryCapExceeded when (|S|+1) * p^r cells exceed the cap.
SubsumTable build_table(const Sequence& S);
SubsumTable build_table_items(const GroupSpec& spec, const std::vector<i64>& items);

enum class SubsumKind { All, Exact, UpTo };

/// Sigma(S), Sigma_k(S), or Sigma_{<=k}(S). Throws BadK unless 1 <= k <= |S|
/// for Exact/UpTo.
std::set<Element> subsums(const Sequence& S, SubsumKind kind, i64 k = 0);

bool is_zero_sumfree(const Sequence& S);

enum class ZeroSumConstraint { Any, ExactLength, Short };

/// A nonempty zero-sum sub-multiset of S meeting the constraint, or nullopt.
/// Short means length in [1, exp(G)] = [1, p].
std::optional<Sequence> find_zero_sum(const Sequence& S,
                                      ZeroSumConstraint constraint = ZeroSumConstraint::Any,
                                      i64 len = 0);

/// Number of index subsets I (including the empty set) with sum 0; exact.
/// Throws WidthExceeded when |S| > 62.
std::uint64_t count_zero_sum_subsequences(const Sequence& S);

bool is_minimal_zero_sum(const Sequence& S);

/// Searches for an index subset of `items` (element indices into spec)
/// summing to target_idx. exact_len fixes the cardinality; when exact_len is
/// -1 the smallest nonempty cardinality (capped by max_len when >= 0) is
/// taken. Returns chosen item positions, or nullopt.
std::optional<std::vector<std::size_t>> find_index_subset(const GroupSpec& spec,
                                                          const std::vector<i64>& items,
                                                          i64 target_idx, i64 exact_len,
                                                          i64 max_len);

/// Sub-multiset of S built from positions into expand(S).
Sequence subsequence_from_positions(const Sequence& S,
                                    const std::vector<std::size_t>& positions);

/// True iff w | S, sigma(w) = 0 and w nonempty: the independent witness check.
bool verify_zero_sum_witness(const Sequence& S, const Sequence& w);

}  // namespace zslab
