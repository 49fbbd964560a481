#pragma once

#include <optional>
#include <string>

#include "zslab/charsum.hpp"
#include "zslab/lemmas.hpp"

namespace zslab {

/// Working state of the Theorem 1.1 case analysis, in the coordinates of the
/// current basis: T a maximal squarefree subsequence, h0 the heaviest
/// first-coordinate class of T, a its (smallest) achieving residue, W the h0
/// entries with first coordinate a, S1 = S W^{-1}.
struct CaseState {
  Sequence S;   // coordinates of the current basis
  Sequence T;
  Sequence W;
  Sequence S1;
  i64 h0 = 0;
  i64 a = 0;
};

CaseState build_case_state(const Sequence& S_coords);

enum class VerdictKind {
  HypothesisFails,
  ConclusionHolds,
  ZeroSumFound,
  SmallPrimeCounterexample,
};

const char* verdict_name(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::HypothesisFails;
  std::string path;  // bound | case1 | case2 | case3-rebasis+case{1,2} | fallback-dp
  i64 h = 0;
  i64 bound = 0;  // floor(p^{1/4 - epsilon})
  std::optional<Sequence> witness;
};

/// Theorem 1.1 driver. Every inequality the proof relies on is re-checked on
/// the instance; a case that cannot certify falls through, ending in the
/// exact DP.
Verdict analyze_theorem_1_1(const Sequence& S, double epsilon, double c);

/// The case machinery without the h(S)-bound shortcut: case 1, case 2, one
/// rebasis retry, then the exact DP. Returns a verified witness or nullopt
/// (S confirmed zero-sumfree), plus the path taken.
std::pair<std::optional<Sequence>, std::string> extract_zero_sum(const Sequence& S,
                                                                 double epsilon, double c);

/// Case 1 (h0 >= floor(sqrt(4p-7)) + 1). Nullopt = inapplicable.
std::optional<Sequence> case1_extract(const CaseState& state);

/// Case 2 (c_eff p^{1/4} <= h0 <= floor(sqrt(4p-7))). Nullopt = inapplicable.
std::optional<Sequence> case2_extract(const CaseState& state, double c_eff);

/// Case 3: scans all p+1 line directions for a coset carrying more than
/// floor(c_eff p^{1/2-epsilon}) entries; returns a basis sending that
/// direction to e2, or nullopt (the Lemma 3.4 regime).
std::optional<Basis> case3_rebasis(const CaseState& state, double epsilon, double c_eff);

struct PipelineStep {
  std::string name;
  std::string detail;
};

struct PipelineReport {
  std::vector<PipelineStep> steps;
  std::vector<std::pair<std::string, std::string>> intermediates;  // name -> serialized
  Verdict final;
};

/// Theorem 1.2: pad with 0^k to length 3p-2, extract a length-p-or-2p
/// zero-sum, strip zeros, drop one element, re-analyze. Preconditions are
/// verified (HasShortZeroSum, BadLength); every intermediate claim is
/// runtime-asserted (TheoremViolation names the failing step).
PipelineReport reduce_theorem_1_2(const Sequence& S, double epsilon, double c);

/// Theorem 1.3: via the Gao translate (Lemma 3.6 content) with k = |S| - p^2.
PipelineReport reduce_theorem_1_3(const Sequence& S, double epsilon, double c);

}  // namespace zslab
