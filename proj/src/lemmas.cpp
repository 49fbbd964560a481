#include "zslab/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace zslab {

namespace {

i64 isqrt_floor(i64 n) {
  i64 x = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

}  // namespace

LemmaReport check_lemma_3_1(const Sequence& S) {
  if (S.spec.r != 1) fail(Errc::RankUnsupported, "lemma 3.1 needs rank 1");
  LemmaReport rep;
  rep.lemma = "3.1";
  SeqStats st = stats(S);
  rep.hypothesis_ok = (st.v0 == 0 && st.length == S.spec.p);
  if (!rep.hypothesis_ok) {
    rep.note = "needs v_0(S) = 0 and |S| = p";
    return rep;
  }
  SubsumTable table = build_table(S);
  auto items = expand(S);
  std::vector<i64> idx(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) idx[i] = elem_index(S.spec, items[i]);
  i64 covered = 0;
  for (i64 g = 0; g < S.spec.p; ++g) {
    i64 len = -1;
    for (i64 c = 1; c <= st.h; ++c) {
      if (table.at(c, g)) {
        len = c;
        break;
      }
    }
    if (len < 0) {
      fail(Errc::TheoremViolation,
           "lemma 3.1: target " + std::to_string(g) + " not covered by Sigma_{<=h}");
    }
    auto positions = find_index_subset(S.spec, idx, g, len, -1);
    rep.cover.emplace_back(Element{g}, subsequence_from_positions(S, *positions));
    ++covered;
  }
  rep.lhs = covered;
  rep.rhs = S.spec.p;
  rep.claim_holds = true;
  return rep;
}

LemmaReport check_lemma_3_2(const Sequence& S, i64 k, int part) {
  if (S.spec.r != 1) fail(Errc::RankUnsupported, "lemma 3.2 needs rank 1");
  if (!is_squarefree(S)) fail(Errc::NotSquarefree, "lemma 3.2 needs a squarefree sequence");
  const i64 l = S.length();
  const i64 p = S.spec.p;
  if (k < 1 || k > l) fail(Errc::BadK, "k = " + std::to_string(k));
  if (part < 1 || part > 3) fail(Errc::BadArgument, "part must be 1, 2 or 3");
  if (part >= 2 && k != l / 2) fail(Errc::BadK, "parts 2 and 3 need k = floor(|S|/2)");

  LemmaReport rep;
  rep.lemma = "3.2(" + std::to_string(part) + ")";
  const i64 part3_len = isqrt_floor(4 * p - 7) + 1;
  if (part == 3 && l != part3_len)
    fail(Errc::BadLengthForPart3,
         "|S| must be floor(sqrt(4p-7))+1 = " + std::to_string(part3_len));
  rep.hypothesis_ok = true;

  auto sums = subsums(S, SubsumKind::Exact, k);
  rep.lhs = static_cast<i64>(sums.size());
  switch (part) {
    case 1:
      rep.rhs = std::min(p, k * (l - k) + 1);
      break;
    case 2:
      // ceil((l^2+3)/4): the set size is an integer, so the real bound rounds up.
      rep.rhs = std::min(p, (l * l + 6) / 4);
      break;
    case 3:
      rep.rhs = p;
      break;
  }
  rep.claim_holds = rep.lhs >= rep.rhs;
  if (!rep.claim_holds)
    fail(Errc::TheoremViolation, "lemma " + rep.lemma + ": |Sigma_k| = " +
                                     std::to_string(rep.lhs) + " < " + std::to_string(rep.rhs));
  return rep;
}

LemmaReport check_lemma_3_3(const Sequence& S, const Basis& basis) {
  if (S.spec.r != 2) fail(Errc::RankUnsupported, "lemma 3.3 needs rank 2");
  LemmaReport rep;
  rep.lemma = "3.3";
  const i64 l = S.length();
  const i64 p = S.spec.p;
  rep.hypothesis_ok = (l >= p) && is_zero_sumfree(S);
  if (!rep.hypothesis_ok) {
    rep.note = "needs zero-sumfree S with |S| >= p";
    return rep;
  }
  Sequence Sc = to_basis_coords(S, basis);
  SubsumTable table = build_table(Sc);
  i64 count = 0;
  for (i64 b = 1; b < p; ++b) {
    i64 gidx = elem_index(Sc.spec, Element{0, b});
    for (i64 c = 1; c <= table.s; ++c) {
      if (table.at(c, gidx)) {
        ++count;
        break;
      }
    }
  }
  rep.lhs = count;
  rep.rhs = l - p + 1;
  rep.claim_holds = rep.lhs >= rep.rhs;
  if (!rep.claim_holds)
    fail(Errc::TheoremViolation, "lemma 3.3: " + std::to_string(rep.lhs) + " < " +
                                     std::to_string(rep.rhs));
  return rep;
}

std::set<Element> sumset(const GroupSpec& spec, const std::set<Element>& A,
                         const std::set<Element>& B) {
  if (spec.r != 1) fail(Errc::RankUnsupported, "sumset is a rank-1 operation");
  if (A.empty() || B.empty()) fail(Errc::EmptySet, "sumset needs nonempty operands");
  std::set<Element> out;
  for (const Element& a : A) {
    for (const Element& b : B) out.insert(add(spec, a, b));
  }
  return out;
}

bool cd_check(const GroupSpec& spec, const std::set<Element>& A,
              const std::set<Element>& B) {
  auto AB = sumset(spec, A, B);
  i64 bound = std::min<i64>(spec.p, static_cast<i64>(A.size() + B.size()) - 1);
  if (static_cast<i64>(AB.size()) < bound)
    fail(Errc::TheoremViolation, "Cauchy-Davenport bound violated");
  return true;
}

LemmaReport find_n_or_2n_zero_sum(const Sequence& S) {
  if (S.spec.r != 2) fail(Errc::RankUnsupported, "lemma 3.5 needs rank 2");
  const i64 n = S.spec.p;
  if (S.length() != 3 * n - 2)
    fail(Errc::BadLength, "|S| = " + std::to_string(S.length()) + ", need 3n-2 = " +
                              std::to_string(3 * n - 2));
  LemmaReport rep;
  rep.lemma = "3.5";
  rep.hypothesis_ok = true;
  for (i64 len : {n, 2 * n}) {
    if (len > S.length()) continue;
    if (auto w = find_zero_sum(S, ZeroSumConstraint::ExactLength, len)) {
      rep.witness = std::move(w);
      rep.claim_holds = true;
      rep.lhs = rep.witness->length();
      rep.rhs = len;
      return rep;
    }
  }
  fail(Errc::TheoremViolation, "lemma 3.5: no zero-sum of length n or 2n found");
}

namespace {

// Depth-first enumeration of sub-multisets of fixed size, choosing a
// multiplicity for each support entry in order (largest first, so singletons
// of early elements come out before deep mixtures at the same entry).
bool scan_submultisets(const Sequence& S, std::size_t entry, i64 remaining,
                       std::vector<std::pair<Element, i64>>& picked,
                       const std::function<bool(const Sequence&)>& visit) {
  if (remaining == 0) {
    Sequence T{S.spec, {}};
    for (const auto& e : picked) {
      if (e.second > 0) T.entries.push_back(e);
    }
    return visit(T);
  }
  if (entry >= S.entries.size()) return false;
  i64 avail = std::min(S.entries[entry].second, remaining);
  for (i64 take = avail; take >= 0; --take) {
    picked.emplace_back(S.entries[entry].first, take);
    if (scan_submultisets(S, entry + 1, remaining - take, picked, visit)) return true;
    picked.pop_back();
  }
  return false;
}

}  // namespace

LemmaReport find_gao_translate(const Sequence& S, i64 k) {
  const GroupSpec& spec = S.spec;
  if (k < 1 || S.length() != spec.order + k)
    fail(Errc::BadLength, "need |S| = |G| + k with k >= 1");
  if (find_zero_sum(S, ZeroSumConstraint::ExactLength, spec.order))
    fail(Errc::HasFullLengthZeroSum, "S has a zero-sum subsequence of length |G|");
  LemmaReport rep;
  rep.lemma = "3.6";
  rep.hypothesis_ok = true;
  for (i64 gidx = 0; gidx < spec.order; ++gidx) {
    Element g = elem_at(spec, gidx);
    std::vector<std::pair<Element, i64>> picked;
    bool found = scan_submultisets(S, 0, k + 1, picked, [&](const Sequence& T) {
      if (!is_zero_sumfree(translate(T, g))) return false;
      rep.translate_g = g;
      rep.translate_T = T;
      return true;
    });
    if (found) {
      rep.claim_holds = true;
      rep.lhs = k + 1;
      rep.rhs = k + 1;
      return rep;
    }
  }
  fail(Errc::TheoremViolation, "lemma 3.6: scan exhausted without a zero-sumfree translate");
}

}  // namespace zslab
