#pragma once

#include <optional>
#include <set>
#include <string>

#include "zslab/subsum.hpp"

namespace zslab {

/// Verdict of an instance check: hypothesis separately from claim, with a
/// re-verifiable certificate. Checkers throw TheoremViolation instead of
/// returning claim_holds = false on a valid hypothesis: the lemmas are
/// theorems, so a violation indicts the implementation.
struct LemmaReport {
  std::string lemma;
  bool hypothesis_ok = false;
  bool claim_holds = false;
  i64 lhs = 0;
  i64 rhs = 0;
  std::string note;
  std::optional<Sequence> witness;                      // zero-sum certificate
  std::optional<Element> translate_g;                   // 3.6: the shift
  std::optional<Sequence> translate_T;                  // 3.6: the subsequence
  std::vector<std::pair<Element, Sequence>> cover;      // 3.1: per-target witnesses
};

/// Lemma 3.1: v_0(S) = 0 and |S| = p imply Sigma_{<=h(S)}(S) = C_p.
LemmaReport check_lemma_3_1(const Sequence& S);

/// Lemma 3.2 over C_p, S squarefree, k in [1, |S|].
///   part 1: |Sigma_k(S)| >= min{p, k(|S|-k)+1}
///   part 2: k = floor(|S|/2): |Sigma_k(S)| >= min{p, (|S|^2+3)/4}
///   part 3: additionally |S| = floor(sqrt(4p-7))+1: Sigma_k(S) = C_p
LemmaReport check_lemma_3_2(const Sequence& S, i64 k, int part);

/// Lemma 3.3: for zero-sumfree S over C_p^2 of length l >= p, the number of
/// nonzero e2-axis values reachable by subsums with zero e1-coordinate is at
/// least l - p + 1.
LemmaReport check_lemma_3_3(const Sequence& S, const Basis& basis);

/// Sumset A + B of subsets of C_p (rank-1 elements). Throws EmptySet.
std::set<Element> sumset(const GroupSpec& spec, const std::set<Element>& A,
                         const std::set<Element>& B);

/// Cauchy-Davenport bound |A+B| >= min{p, |A|+|B|-1}; throws TheoremViolation
/// on failure (the bound is a theorem).
bool cd_check(const GroupSpec& spec, const std::set<Element>& A,
              const std::set<Element>& B);

/// Lemma 3.5: any sequence over C_n^2 of length 3n - 2 contains a zero-sum
/// subsequence of length n or 2n. Certificate is the witness found.
LemmaReport find_n_or_2n_zero_sum(const Sequence& S);

/// Lemma 3.6 (Gao): |S| = |G| + k, k >= 1, no zero-sum subsequence of length
/// |G|: produces (g, T) with |T| = k + 1 and g + T zero-sumfree, first hit in
/// deterministic scan order.
LemmaReport find_gao_translate(const Sequence& S, i64 k);

}  // namespace zslab
