#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "zslab/search.hpp"
#include "zslab/theorems.hpp"

using namespace zslab;

namespace {
Sequence seq2(i64 p, const std::vector<Element>& elems) {
  return make_sequence(make_group(p, 2), elems);
}
}  // namespace

TEST_CASE("case state construction") {
  auto S = seq2(5, {{2, 0}, {2, 1}, {2, 3}, {1, 4}, {2, 1}, {0, 2}});
  auto st = build_case_state(S);
  CHECK(st.T.length() == 5);  // squarefree support
  CHECK(st.h0 == 3);          // first coordinate 2 appears thrice in T
  CHECK(st.a == 2);
  CHECK(st.W == seq2(5, {{2, 0}, {2, 1}, {2, 3}}));
  CHECK(concat(st.S1, st.W) == S);
  SUBCASE("a is the smallest maximizing residue") {
    auto T = seq2(5, {{1, 0}, {1, 1}, {3, 0}, {3, 2}});
    CHECK(build_case_state(T).a == 1);
  }
}

TEST_CASE("multiplicity analysis verdicts") {
  SUBCASE("too short fails the hypothesis") {
    auto v = analyze_theorem_1_1(seq2(7, {{1, 0}}), 0.1, 1.0);
    CHECK(v.kind == VerdictKind::HypothesisFails);
  }
  SUBCASE("small prime bound is vacuous: floor(7^0.15) = 1") {
    auto S = seq2(7, {{1, 0}, {2, 1}, {3, 2}, {4, 3}, {5, 4}, {6, 5}, {1, 6},
                      {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}});
    auto v = analyze_theorem_1_1(S, 0.1, 1.0);
    CHECK(v.kind == VerdictKind::ConclusionHolds);
    CHECK(v.bound == 1);
  }
  SUBCASE("cancelling pair yields a zero-sum somewhere on the path") {
    // h(S) = 1 and bound must exceed 1 to get past the shortcut; at desk
    // scale the bound is 1, so drive the machinery directly instead.
    auto g = make_group(7, 2);
    std::mt19937_64 rng(3);
    auto S = seq2(7, {{1, 2}, {6, 5}, {2, 3}, {3, 1}, {4, 6}, {5, 2}, {0, 1},
                      {1, 1}, {2, 6}, {6, 3}, {3, 4}, {5, 6}});
    auto [w, path] = extract_zero_sum(S, 0.1, 1.0);
    REQUIRE(w.has_value());
    CHECK(verify_zero_sum_witness(S, *w));
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(analyze_theorem_1_1(seq2(7, {{1, 0}}), 0.3, 1.0), Error);
    CHECK_THROWS_AS(analyze_theorem_1_1(seq2(7, {{1, 0}}), 0.1, 0.0), Error);
    auto S1 = make_sequence(make_group(7, 1), std::vector<Element>{{1}});
    CHECK_THROWS_AS(analyze_theorem_1_1(S1, 0.1, 1.0), Error);
  }
}

TEST_CASE("verdicts agree with the exact decision procedure") {
  std::mt19937_64 rng(77);
  const i64 p = 7;
  auto g = make_group(p, 2);
  const i64 min_len = 2 * p - static_cast<i64>(std::floor(2 * std::sqrt((double)p)));
  for (int t = 0; t < 1000; ++t) {
    i64 len = min_len + static_cast<i64>(rng() % 6);
    auto S = oracle::random_sequence(g, len, rng);
    bool zsf = is_zero_sumfree(S);
    auto v = analyze_theorem_1_1(S, 0.1, 2.0);
    if (v.kind == VerdictKind::ZeroSumFound) {
      CHECK_FALSE(zsf);
      REQUIRE(v.witness.has_value());
      CHECK(verify_zero_sum_witness(S, *v.witness));
    }
    if (v.kind == VerdictKind::SmallPrimeCounterexample) CHECK(zsf);
    // drive the case machinery directly as well (no vacuous-bound shortcut)
    auto [w, path] = extract_zero_sum(S, 0.1, 2.0);
    CHECK(w.has_value() == !zsf);
    if (w) CHECK(verify_zero_sum_witness(S, *w));
  }
}

TEST_CASE("case machinery on multiple primes") {
  std::mt19937_64 rng(78);
  for (i64 p : {3, 5, 11}) {
    auto g = make_group(p, 2);
    for (int t = 0; t < 120; ++t) {
      i64 len = p + static_cast<i64>(rng() % (p + 2));
      auto S = oracle::random_sequence(g, len, rng);
      auto [w, path] = extract_zero_sum(S, 0.1, 2.0);
      CHECK(w.has_value() == !is_zero_sumfree(S));
      if (w) CHECK(verify_zero_sum_witness(S, *w));
    }
  }
}

TEST_CASE("heavy first coordinate drives the direct cases") {
  // make h0 large enough for case 1 at p = 3: floor(sqrt(5)) + 1 = 3
  auto st = build_case_state(seq2(3, {{1, 0}, {1, 1}, {1, 2}, {0, 1}, {2, 2}}));
  REQUIRE(st.h0 == 3);
  auto w = case1_extract(st);
  REQUIRE(w.has_value());
  CHECK(is_zero(sigma(*w)));
  CHECK(divides(*w, st.S));
}

TEST_CASE("case applicability thresholds") {
  SUBCASE("low h0 is inapplicable to case 1") {
    auto st = build_case_state(seq2(7, {{1, 0}, {2, 1}, {3, 2}, {4, 3}}));
    CHECK(st.h0 == 1);
    CHECK_FALSE(case1_extract(st).has_value());
  }
  SUBCASE("h0 above the case 2 band is inapplicable") {
    auto st = build_case_state(seq2(3, {{1, 0}, {1, 1}, {1, 2}, {0, 1}}));
    // band: c_eff p^{1/4} = 9 * 3^{0.25} > 3 = h0's ceiling here
    CHECK_FALSE(case2_extract(st, 9.0).has_value());
  }
}

TEST_CASE("rebasis detection of a heavy line") {
  auto g = make_group(5, 2);
  SUBCASE("sequence concentrated on one coset") {
    // all entries on (1,0) + <(0,1)>
    auto S = seq2(5, {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 0}, {1, 1}, {1, 2}});
    auto st = build_case_state(S);
    auto b = case3_rebasis(st, 0.2, 1.0);  // cap = floor(5^0.3) = 1
    REQUIRE(b.has_value());
    // the new second basis vector spans the heavy direction
    CHECK(line_contains(g, SubgroupLine{{0, 1}}, b->e2));
    auto recoord = to_basis_coords(S, *b);
    CHECK(build_case_state(recoord).h0 >= st.h0);
  }
  SUBCASE("spread sequence stays put") {
    // one entry per line direction keeps all coset loads at 1 = cap... use
    // cap >= 2 so no coset exceeds it
    auto S = seq2(5, {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {1, 4}});
    auto st = build_case_state(S);
    CHECK_FALSE(case3_rebasis(st, 0.2, 4.0).has_value());  // cap = floor(4*5^0.3) = 6
  }
}

TEST_CASE("padding pipeline end to end") {
  SUBCASE("C_3^2 instance without short zero-sums") {
    auto S = seq2(3, {{1, 0}, {1, 0}, {0, 1}, {0, 1}, {1, 1}, {1, 1}});
    auto rep = reduce_theorem_1_2(S, 0.1, 2.0);
    CHECK(rep.final.kind == VerdictKind::ConclusionHolds);
    CHECK_FALSE(rep.steps.empty());
    CHECK_FALSE(rep.intermediates.empty());
  }
  SUBCASE("C_2^2 instance") {
    auto S = seq2(2, {{1, 0}, {0, 1}, {1, 1}});
    auto rep = reduce_theorem_1_2(S, 0.1, 2.0);
    CHECK(rep.final.kind == VerdictKind::ConclusionHolds);
  }
  SUBCASE("short zero-sum present is rejected") {
    auto S = seq2(3, {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {1, 1}});
    CHECK_THROWS_WITH_AS(reduce_theorem_1_2(S, 0.1, 2.0),
                         doctest::Contains("HasShortZeroSum"), Error);
  }
  SUBCASE("length window is enforced") {
    CHECK_THROWS_WITH_AS(reduce_theorem_1_2(seq2(3, {{1, 0}}), 0.1, 2.0),
                         doctest::Contains("BadLength"), Error);
  }
}

TEST_CASE("translate pipeline end to end") {
  SUBCASE("C_2^2 instance with no length-4 zero-sum") {
    auto S = seq2(2, {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto rep = reduce_theorem_1_3(S, 0.1, 2.0);
    CHECK(rep.final.kind == VerdictKind::ConclusionHolds);
    CHECK_FALSE(rep.steps.empty());
  }
  SUBCASE("length-|G| zero-sum is rejected") {
    auto S = seq2(2, {{1, 0}, {1, 0}, {0, 1}, {0, 1}, {1, 1}});
    CHECK_THROWS_WITH_AS(reduce_theorem_1_3(S, 0.1, 2.0),
                         doctest::Contains("HasFullLengthZeroSum"), Error);
  }
  SUBCASE("too short is rejected") {
    CHECK_THROWS_WITH_AS(reduce_theorem_1_3(seq2(2, {{1, 0}}), 0.1, 2.0),
                         doctest::Contains("BadLength"), Error);
  }
}

TEST_CASE("verdict names") {
  CHECK(std::string(verdict_name(VerdictKind::HypothesisFails)) == "HypothesisFails");
  CHECK(std::string(verdict_name(VerdictKind::ConclusionHolds)) == "ConclusionHolds");
  CHECK(std::string(verdict_name(VerdictKind::ZeroSumFound)) == "ZeroSumFound");
  CHECK(std::string(verdict_name(VerdictKind::SmallPrimeCounterexample)) ==
        "SmallPrimeCounterexample");
}
