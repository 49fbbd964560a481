#include "zslab/theorems.hpp"

#include <algorithm>
#include <cmath>

namespace zslab {

namespace {

i64 isqrt_floor(i64 n) {
  i64 x = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

i64 mod_p(i64 x, i64 p) {
  i64 m = x % p;
  return m < 0 ? m + p : m;
}

std::vector<i64> first_coord_items(const Sequence& S) {
  std::vector<i64> out;
  out.reserve(static_cast<std::size_t>(S.length()));
  for (const auto& [g, m] : S.entries) {
    for (i64 i = 0; i < m; ++i) out.push_back(g[0]);
  }
  return out;
}

i64 nonzero_first_coord_count(const Sequence& S) {
  i64 n = 0;
  for (const auto& [g, m] : S.entries) {
    if (g[0] != 0) n += m;
  }
  return n;
}

void check_witness(const Sequence& S, const Sequence& w, const char* where) {
  if (!verify_zero_sum_witness(S, w))
    fail(Errc::TheoremViolation, std::string(where) + ": extracted witness fails re-verification");
}

}  // namespace

const char* verdict_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::HypothesisFails: return "HypothesisFails";
    case VerdictKind::ConclusionHolds: return "ConclusionHolds";
    case VerdictKind::ZeroSumFound: return "ZeroSumFound";
    case VerdictKind::SmallPrimeCounterexample: return "SmallPrimeCounterexample";
  }
  return "Unknown";
}

CaseState build_case_state(const Sequence& S_coords) {
  if (S_coords.spec.r != 2) fail(Errc::RankUnsupported, "case analysis needs r = 2");
  CaseState state;
  state.S = S_coords;
  state.T = max_squarefree(S_coords);
  std::vector<i64> counts(static_cast<std::size_t>(S_coords.spec.p), 0);
  for (const auto& [g, m] : state.T.entries) ++counts[static_cast<std::size_t>(g[0])];
  state.h0 = 0;
  state.a = 0;
  for (i64 a = 0; a < S_coords.spec.p; ++a) {
    if (counts[static_cast<std::size_t>(a)] > state.h0) {
      state.h0 = counts[static_cast<std::size_t>(a)];
      state.a = a;  // smallest maximizer
    }
  }
  state.W = Sequence{S_coords.spec, {}};
  for (const auto& [g, m] : state.T.entries) {
    if (g[0] == state.a) state.W.entries.emplace_back(g, 1);
  }
  state.S1 = divide(S_coords, state.W);
  return state;
}

std::optional<Sequence> case1_extract(const CaseState& state) {
  const GroupSpec& spec = state.S.spec;
  const i64 p = spec.p;
  const i64 k = isqrt_floor(4 * p - 7) + 1;
  if (state.h0 < k) return std::nullopt;
  const i64 l = k / 2;
  GroupSpec line = make_group(p, 1);

  // The k distinct b-values of W's head; Lemma 3.2(3) regime.
  Sequence Wk{spec, {}};
  std::vector<i64> bvals;
  for (i64 i = 0; i < k; ++i) {
    Wk.entries.push_back(state.W.entries[static_cast<std::size_t>(i)]);
    bvals.push_back(state.W.entries[static_cast<std::size_t>(i)].first[1]);
  }
  Sequence S2 = divide(state.S, Wk);

  // The proof guarantees success via Lemma 3.1 when S2 has at least p nonzero
  // first coordinates; below that the table searches are attempted anyway and
  // simply may come back empty (small-prime instances can still succeed).
  const bool guaranteed = nonzero_first_coord_count(S2) >= p;
  (void)guaranteed;

  // S3 | S2 with sigma(phi_1(S3)) = -l a; empty is fine when the target is 0
  // (the I-part below is nonempty on its own).
  const i64 target3 = mod_p(-l * state.a, p);
  Sequence S3{spec, {}};
  if (target3 != 0) {
    auto pos3 = find_index_subset(line, first_coord_items(S2), target3, -1, -1);
    if (!pos3 || pos3->empty()) return std::nullopt;
    S3 = subsequence_from_positions(S2, *pos3);
  }

  // I subset of [1, k], |I| = l, with sum of b_i = -sigma(phi_2(S3)).
  i64 b3 = sigma(S3)[1];
  auto posI = find_index_subset(line, bvals, mod_p(-b3, p), l, -1);
  if (!posI) return std::nullopt;

  Sequence witness = S3;
  for (std::size_t i : *posI)
    witness = concat(witness, Sequence{spec, {{Wk.entries[i].first, 1}}});
  check_witness(state.S, witness, "case1");
  return witness;
}

std::optional<Sequence> case2_extract(const CaseState& state, double c_eff) {
  const GroupSpec& spec = state.S.spec;
  const i64 p = spec.p;
  const double p14 = std::pow(static_cast<double>(p), 0.25);
  if (!(static_cast<double>(state.h0) >= c_eff * p14)) return std::nullopt;
  if (state.h0 > isqrt_floor(4 * p - 7)) return std::nullopt;
  const i64 k = state.h0 / 2;
  if (k < 1) return std::nullopt;
  GroupSpec line = make_group(p, 1);

  Sequence phi1_S1 = project_coord(state.S1, 0);
  const i64 h1 = h_of(phi1_S1);
  if (state.S1.length() - stats(phi1_S1).v0 < p) return std::nullopt;

  // S4 | S1, nonempty, sigma(phi_1(S4)) = -k a, |S4| <= h1 (Lemma 3.1 regime).
  auto pos4 = find_index_subset(line, first_coord_items(state.S1), mod_p(-k * state.a, p), -1, h1);
  if (!pos4 || pos4->empty()) return std::nullopt;
  Sequence S4 = subsequence_from_positions(state.S1, *pos4);
  const i64 s4b = sigma(S4)[1];

  // A = sigma(S4) + Sigma_k(b-values of W), a subset of <e2>.
  std::vector<i64> bvals;
  for (const auto& [g, m] : state.W.entries) bvals.push_back(g[1]);
  SubsumTable btable = build_table_items(line, bvals);
  std::vector<char> inA(static_cast<std::size_t>(p), 0);
  for (i64 w = 0; w < p; ++w) {
    if (btable.at(k, w)) inA[static_cast<std::size_t>(mod_p(s4b + w, p))] = 1;
  }
  auto expand_A = [&](i64 aval) {
    auto posW = find_index_subset(line, bvals, mod_p(aval - s4b, p), k, -1);
    Sequence part{spec, {}};
    for (std::size_t i : *posW)
      part = concat(part, Sequence{spec, {{state.W.entries[i].first, 1}}});
    return part;
  };
  if (inA[0]) {
    Sequence witness = concat(S4, expand_A(0));
    check_witness(state.S, witness, "case2");
    return witness;
  }

  // B = Sigma(S5) intersect <e2>, S5 = S (S4 W)^{-1}.
  Sequence S5 = divide(state.S, concat(S4, state.W));
  SubsumTable t5 = build_table(S5);
  std::vector<char> inB(static_cast<std::size_t>(p), 0);
  std::vector<i64> lenB(static_cast<std::size_t>(p), -1);
  for (i64 b = 0; b < p; ++b) {
    i64 gidx = elem_index(spec, Element{0, b});
    for (i64 c = 1; c <= t5.s; ++c) {
      if (t5.at(c, gidx)) {
        inB[static_cast<std::size_t>(b)] = 1;
        lenB[static_cast<std::size_t>(b)] = c;
        break;
      }
    }
  }
  auto expand_B = [&](i64 bval) {
    auto pos = find_index_subset(spec, [&] {
      std::vector<i64> items;
      for (const auto& [g, m] : S5.entries) {
        i64 idx = elem_index(spec, g);
        for (i64 i = 0; i < m; ++i) items.push_back(idx);
      }
      return items;
    }(), elem_index(spec, Element{0, bval}), lenB[static_cast<std::size_t>(bval)], -1);
    return subsequence_from_positions(S5, *pos);
  };
  if (inB[0]) {
    // A zero-sum lives entirely inside S5.
    Sequence witness = expand_B(0);
    check_witness(state.S, witness, "case2");
    return witness;
  }

  i64 sizeA = std::count(inA.begin(), inA.end(), char{1});
  i64 sizeB = std::count(inB.begin(), inB.end(), char{1});
  if (sizeA + sizeB < p + 1) return std::nullopt;

  for (i64 aval = 0; aval < p; ++aval) {
    if (!inA[static_cast<std::size_t>(aval)]) continue;
    i64 bval = mod_p(-aval, p);
    if (!inB[static_cast<std::size_t>(bval)]) continue;
    Sequence witness = concat(concat(S4, expand_A(aval)), expand_B(bval));
    check_witness(state.S, witness, "case2");
    return witness;
  }
  // |A| + |B| >= p + 1 forces an intersection of A and -B.
  fail(Errc::TheoremViolation, "case2: pigeonhole intersection missing");
}

std::optional<Basis> case3_rebasis(const CaseState& state, double epsilon, double c_eff) {
  const GroupSpec& spec = state.S.spec;
  const i64 p = spec.p;
  const i64 cap = static_cast<i64>(
      std::floor(c_eff * std::pow(static_cast<double>(p), 0.5 - epsilon)));
  i64 best_load = cap;
  std::optional<Element> best_direction;
  for (const SubgroupLine& line : order_p_subgroups(spec)) {
    Element j = line_functional(spec, line);
    std::vector<i64> load(static_cast<std::size_t>(p), 0);
    for (const auto& [g, m] : state.S.entries)
      load[static_cast<std::size_t>(dot_mod_p(spec, j, g))] += m;
    i64 top = *std::max_element(load.begin(), load.end());
    if (top > best_load) {
      best_load = top;
      best_direction = line.direction;
    }
  }
  if (!best_direction) return std::nullopt;
  Element e2 = *best_direction;
  Element e1 = (e2[0] == 0) ? Element{1, 0} : Element{0, 1};
  return change_basis(spec, e1, e2);
}

std::pair<std::optional<Sequence>, std::string> extract_zero_sum(const Sequence& S,
                                                                 double epsilon, double c) {
  const double c_eff = std::max(c, 9.0);  // the proof's WLOG normalization
  Sequence S_cur = S;
  std::vector<Basis> chain;
  auto map_back = [&](Sequence w) {
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      w = from_basis_coords(w, *it);
    check_witness(S, w, "extract");
    return w;
  };
  std::string prefix;
  for (int attempt = 0; attempt < 2; ++attempt) {
    CaseState state = build_case_state(S_cur);
    if (auto w = case1_extract(state)) return {map_back(*w), prefix + "case1"};
    if (auto w = case2_extract(state, c_eff)) return {map_back(*w), prefix + "case2"};
    if (attempt > 0) break;
    auto basis = case3_rebasis(state, epsilon, c_eff);
    if (!basis) break;
    S_cur = to_basis_coords(S_cur, *basis);
    chain.push_back(*basis);
    prefix = "case3-rebasis+";
  }
  if (auto w = find_zero_sum(S, ZeroSumConstraint::Any)) {
    check_witness(S, *w, "fallback-dp");
    return {std::move(w), "fallback-dp"};
  }
  return {std::nullopt, "fallback-dp"};
}

namespace {

void validate_theorem_params(const Sequence& S, double epsilon, double c) {
  if (S.spec.r != 2) fail(Errc::RankUnsupported, "theorems need r = 2");
  if (!(epsilon > 0.0 && epsilon < 0.25))
    fail(Errc::BadArgument, "epsilon must lie in (0, 1/4)");
  if (!(c > 0.0)) fail(Errc::BadArgument, "c must be positive");
}

}  // namespace

Verdict analyze_theorem_1_1(const Sequence& S, double epsilon, double c) {
  validate_theorem_params(S, epsilon, c);
  const i64 p = S.spec.p;
  Verdict v;
  v.h = h_of(S);
  v.bound = static_cast<i64>(std::floor(std::pow(static_cast<double>(p), 0.25 - epsilon)));
  const double length_bound = 2.0 * static_cast<double>(p) - c * std::sqrt(static_cast<double>(p));
  if (static_cast<double>(S.length()) < length_bound) {
    v.kind = VerdictKind::HypothesisFails;
    v.path = "length";
    return v;
  }
  if (v.h >= v.bound) {
    v.kind = VerdictKind::ConclusionHolds;
    v.path = "bound";
    return v;
  }
  auto [w, path] = extract_zero_sum(S, epsilon, c);
  v.path = path;
  if (w) {
    v.kind = VerdictKind::ZeroSumFound;
    v.witness = std::move(w);
  } else {
    v.kind = VerdictKind::SmallPrimeCounterexample;
  }
  return v;
}

namespace {

void step(PipelineReport& rep, const std::string& name, const std::string& detail) {
  rep.steps.push_back({name, detail});
}

void keep(PipelineReport& rep, const std::string& name, const Sequence& S) {
  rep.intermediates.emplace_back(name, serialize(S));
}

void assert_step(bool ok, const std::string& name) {
  if (!ok) fail(Errc::TheoremViolation, "pipeline step failed: " + name);
}

}  // namespace

PipelineReport reduce_theorem_1_2(const Sequence& S, double epsilon, double c) {
  validate_theorem_params(S, epsilon, c);
  const i64 p = S.spec.p;
  const i64 s = S.length();
  PipelineReport rep;
  const double lower = 3.0 * p - c * std::sqrt(static_cast<double>(p)) - 1.0;
  if (static_cast<double>(s) < lower || s > 3 * p - 2)
    fail(Errc::BadLength, "|S| = " + std::to_string(s) + " outside [3p - c sqrt(p) - 1, 3p - 2]");
  if (auto w = find_zero_sum(S, ZeroSumConstraint::Short))
    fail(Errc::HasShortZeroSum,
         "S has a zero-sum subsequence of length " + std::to_string(w->length()) +
             " <= exp(G) = p");
  step(rep, "preconditions", "no short zero-sum (convention: short = length <= p)");
  keep(rep, "S", S);

  const i64 k = 3 * p - 2 - s;
  assert_step(k < p, "k = 3p - 2 - |S| < p");
  Sequence W = pad_zeros(S, k);
  step(rep, "pad", "W = 0^" + std::to_string(k) + " S, |W| = " + std::to_string(W.length()));
  keep(rep, "W", W);

  LemmaReport found = find_n_or_2n_zero_sum(W);
  Sequence T = *found.witness;
  step(rep, "lemma-3.5", "zero-sum T of length " + std::to_string(T.length()));
  keep(rep, "T", T);

  i64 zeros = multiplicity_of(T, zero_of(S.spec));
  Sequence T1 = zeros > 0 ? divide(T, Sequence{S.spec, {{zero_of(S.spec), zeros}}}) : T;
  assert_step(T1.length() > p, "|T1| > p");
  assert_step(T.length() == 2 * p, "|T| = 2p");
  assert_step(is_minimal_zero_sum(T1), "T1 minimal zero-sum");
  step(rep, "strip-zeros", "|T1| = " + std::to_string(T1.length()));
  keep(rep, "T1", T1);

  Element g = T1.entries.front().first;  // first in canonical order
  Sequence T1g = divide(T1, Sequence{S.spec, {{g, 1}}});
  assert_step(is_zero_sumfree(T1g), "T1 g^{-1} zero-sumfree");
  assert_step(T1g.length() >= 2 * p - static_cast<i64>(std::floor(c * std::sqrt(static_cast<double>(p)))),
              "|T1 g^{-1}| >= 2p - floor(c sqrt(p))");
  step(rep, "drop-element", "removed g, |T1 g^{-1}| = " + std::to_string(T1g.length()));
  keep(rep, "T1_minus_g", T1g);

  rep.final = analyze_theorem_1_1(T1g, epsilon, c);
  step(rep, "theorem-1.1", std::string(verdict_name(rep.final.kind)) + " via " + rep.final.path);
  return rep;
}

PipelineReport reduce_theorem_1_3(const Sequence& S, double epsilon, double c) {
  validate_theorem_params(S, epsilon, c);
  const i64 p = S.spec.p;
  const i64 s = S.length();
  PipelineReport rep;
  const double lower =
      static_cast<double>(p) * p + 2.0 * p - c * std::sqrt(static_cast<double>(p)) - 1.0;
  if (static_cast<double>(s) < lower)
    fail(Errc::BadLength, "|S| = " + std::to_string(s) + " below p^2 + 2p - c sqrt(p) - 1");
  const i64 k = s - S.spec.order;
  if (k < 1) fail(Errc::BadLength, "need |S| > |G| = p^2");
  auto cells = static_cast<std::size_t>(s + 1) * static_cast<std::size_t>(S.spec.order);
  if (cells > memory_cap())
    fail(Errc::FeasibilityGuard, "length-p^2 table exceeds the memory cap");
  keep(rep, "S", S);

  LemmaReport gao = find_gao_translate(S, k);  // checks the length-|G| zero-sum itself
  Sequence T = *gao.translate_T;
  Element g = *gao.translate_g;
  step(rep, "lemma-3.6", "found (g, T) with |T| = " + std::to_string(T.length()));
  keep(rep, "T", T);

  assert_step(T.length() == k + 1, "|T| = |S| - p^2 + 1");
  assert_step(static_cast<double>(T.length()) >=
                  2.0 * p - c * std::sqrt(static_cast<double>(p)),
              "|T| >= 2p - c sqrt(p)");
  Sequence gT = translate(T, g);
  assert_step(is_zero_sumfree(gT), "g + T zero-sumfree");
  assert_step(h_of(gT) == h_of(T), "h(g + T) = h(T)");
  assert_step(h_of(S) >= h_of(T), "h(S) >= h(T)");
  step(rep, "translate",
       "h(S) = " + std::to_string(h_of(S)) + " >= h(T) = h(g+T) = " + std::to_string(h_of(gT)));
  keep(rep, "g_plus_T", gT);

  rep.final = analyze_theorem_1_1(gT, epsilon, c);
  step(rep, "theorem-1.1", std::string(verdict_name(rep.final.kind)) + " via " + rep.final.path);
  return rep;
}

}  // namespace zslab
