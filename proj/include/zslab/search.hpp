#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "zslab/subsum.hpp"

namespace zslab {

struct SearchConfig {
  i64 p = 3;
  bool exhaustive = true;
  std::uint64_t samples = 10000;   // randomized mode
  std::uint64_t seed = 0;
  bool symmetry = true;
  std::uint64_t node_budget = 0;   // 0 = unlimited
  double time_budget_s = 0;        // 0 = unlimited
  bool allow_large = false;        // exhaustive permitted for p > 5 only with this
};

struct ExtremalCatalog {
  i64 p = 0;
  i64 max_length = 0;
  std::vector<Sequence> extremal;  // canonical forms, pairwise distinct
  i64 min_h = 0;
  bool exhaustive = false;         // false when a budget cut the run short
  std::uint64_t nodes = 0;
};

/// Maximal zero-sumfree length over C_p^2 by branch-and-prune over
/// non-decreasing element sequences, pruning any prefix with 0 in Sigma.
/// Throws BudgetExceeded carrying no partial state only when nothing was
/// found; otherwise returns with exhaustive = false.
ExtremalCatalog max_zero_sumfree_length(const SearchConfig& config);

struct PropertyBReport {
  i64 p = 0;
  i64 bound = 0;  // p - 2
  i64 min_h = 0;
  bool holds = false;
  std::map<i64, i64> h_histogram;  // over the extremal catalog
  i64 catalog_size = 0;
  bool exhaustive = false;
};

/// Every zero-sumfree sequence of length 2p-2 over C_p^2 has h >= p-2.
/// Throws TheoremViolation on a violation (the statement is proven).
PropertyBReport verify_property_b(const SearchConfig& config);

/// Seeded greedy extension with restarts; deterministic per seed. Nullopt
/// after the attempt budget (always, for length > 2p-2).
std::optional<Sequence> random_zero_sumfree(i64 p, i64 length, std::uint64_t seed,
                                            int attempt_budget = 5000);

/// Lexicographically minimal sequence in the Aut(C_p^2) orbit of S. Exact
/// orbit minimization when the full GL_2(F_p) scan is affordable (see
/// canonical_is_exact), pruned heuristic above that.
Sequence canonical_form(const Sequence& S);
bool canonical_is_exact(i64 p);

/// Image of S under an invertible coordinate matrix m (row-major).
Sequence apply_automorphism(const Sequence& S, const std::array<std::array<i64, 2>, 2>& m);

}  // namespace zslab
