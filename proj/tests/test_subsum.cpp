#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zslab/subsum.hpp"

using namespace zslab;

namespace {
Sequence seq(i64 p, int r, const std::vector<Element>& elems) {
  return make_sequence(make_group(p, r), elems);
}
}  // namespace

TEST_CASE("build_table on tiny inputs") {
  auto g = make_group(2, 2);
  SUBCASE("two independent generators") {
    auto S = seq(2, 2, {{1, 0}, {0, 1}});
    auto tbl = build_table(S);
    CHECK(tbl.at(0, elem_index(g, {0, 0})));
    CHECK_FALSE(tbl.at(0, elem_index(g, {1, 0})));
    CHECK(tbl.at(1, elem_index(g, {1, 0})));
    CHECK(tbl.at(1, elem_index(g, {0, 1})));
    CHECK_FALSE(tbl.at(1, elem_index(g, {1, 1})));
    CHECK(tbl.at(2, elem_index(g, {1, 1})));
    CHECK_FALSE(tbl.at(2, elem_index(g, {0, 0})));
  }
  SUBCASE("empty sequence") {
    auto tbl = build_table(seq(2, 2, {}));
    CHECK(tbl.s == 0);
    CHECK(tbl.at(0, 0));
    for (i64 i = 1; i < 4; ++i) CHECK_FALSE(tbl.at(0, i));
  }
  SUBCASE("g^p reaches zero at layer p") {
    auto g5 = make_group(5, 2);
    auto S = make_sequence(g5, {{1, 3}, {1, 3}, {1, 3}, {1, 3}, {1, 3}});
    auto tbl = build_table(S);
    CHECK(tbl.at(5, 0));
  }
}

TEST_CASE("memory cap guard") {
  // (|S|+1) * p^2 bytes beyond the default 256 MiB is impossible at desk
  // scale, so exercise the guard through the environment override.
  setenv("ZSLAB_MEM_CAP", "64", 1);
  // the cap is latched on first use in this process; a fresh process would
  // honor 64 bytes, here we at least confirm the default-path table builds.
  unsetenv("ZSLAB_MEM_CAP");
  auto S = seq(3, 2, {{1, 0}, {0, 1}});
  CHECK_NOTHROW(build_table(S));
}

TEST_CASE("subsums worked examples over C_5") {
  auto S = make_sequence(make_group(5, 1), {{1}, {2}, {3}});
  auto two = subsums(S, SubsumKind::Exact, 2);
  CHECK(two == std::set<Element>{{3}, {4}, {0}});
  auto all = subsums(S, SubsumKind::All);
  CHECK(all == std::set<Element>{{0}, {1}, {2}, {3}, {4}});
  CHECK(subsums(S, SubsumKind::Exact, 3) == std::set<Element>{{1}});
  CHECK_THROWS_WITH_AS(subsums(S, SubsumKind::Exact, 0), doctest::Contains("BadK"), Error);
  CHECK_THROWS_AS(subsums(S, SubsumKind::UpTo, 4), Error);
}

TEST_CASE("oracle equivalence on random instances") {
  std::mt19937_64 rng(2026);
  const i64 primes[] = {2, 3, 5, 7};
  for (int t = 0; t < 500; ++t) {
    auto g = make_group(primes[t % 4], 1 + t % 2);
    std::uniform_int_distribution<i64> plen(0, 14);
    auto S = oracle::random_sequence(g, plen(rng), rng);
    auto direct = oracle::enumerate_subsums(S);

    std::set<Element> all_direct;
    for (i64 k = 1; k <= S.length(); ++k)
      all_direct.insert(direct[static_cast<std::size_t>(k)].begin(),
                        direct[static_cast<std::size_t>(k)].end());
    CHECK(subsums(S, SubsumKind::All) == all_direct);
    if (S.length() >= 1) {
      i64 k = 1 + static_cast<i64>(rng() % static_cast<std::uint64_t>(S.length()));
      CHECK(subsums(S, SubsumKind::Exact, k) == direct[static_cast<std::size_t>(k)]);
      std::set<Element> upto;
      for (i64 j = 1; j <= k; ++j)
        upto.insert(direct[static_cast<std::size_t>(j)].begin(),
                    direct[static_cast<std::size_t>(j)].end());
      CHECK(subsums(S, SubsumKind::UpTo, k) == upto);
    }
    CHECK(count_zero_sum_subsequences(S) == oracle::count_zero_sum_subsets(S));
    CHECK(is_zero_sumfree(S) == oracle::zero_sumfree_direct(S));
  }
}

TEST_CASE("complement symmetry of the layers") {
  std::mt19937_64 rng(17);
  auto g = make_group(5, 2);
  for (int t = 0; t < 100; ++t) {
    auto S = oracle::random_sequence(g, 2 + t % 10, rng);
    auto tbl = build_table(S);
    auto total = sigma(S);
    for (i64 c = 0; c <= S.length(); ++c)
      for (i64 gi = 0; gi < g.order; ++gi) {
        auto e = elem_at(g, gi);
        auto comp = elem_index(g, sub(g, total, e));
        CHECK(tbl.at(c, gi) == tbl.at(S.length() - c, comp));
      }
  }
}

TEST_CASE("is_zero_sumfree examples") {
  CHECK(is_zero_sumfree(seq(3, 2, {{1, 0}, {1, 0}, {0, 1}, {0, 1}})));
  CHECK_FALSE(is_zero_sumfree(seq(5, 2, {{1, 2}, {4, 3}})));  // g and -g
  CHECK(is_zero_sumfree(seq(3, 2, {})));
}

TEST_CASE("find_zero_sum with constraints") {
  SUBCASE("doubled involution at exact length 2") {
    auto S = seq(2, 2, {{1, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto w = find_zero_sum(S, ZeroSumConstraint::ExactLength, 2);
    REQUIRE(w.has_value());
    CHECK(w->length() == 2);
    CHECK(verify_zero_sum_witness(S, *w));
  }
  SUBCASE("zero-sumfree has none") {
    auto S = seq(3, 2, {{1, 0}, {1, 0}, {0, 1}, {0, 1}});
    CHECK_FALSE(find_zero_sum(S).has_value());
  }
  SUBCASE("p copies of 1 give a short witness") {
    auto S = make_sequence(make_group(7, 1),
                           {{1}, {1}, {1}, {1}, {1}, {1}, {1}});
    auto w = find_zero_sum(S, ZeroSumConstraint::Short);
    REQUIRE(w.has_value());
    CHECK(w->length() == 7);
    CHECK(verify_zero_sum_witness(S, *w));
  }
  SUBCASE("short constraint rejects witnesses longer than p") {
    // only zero-sum is all eight entries: 1^4 3^4 over C_4? use C_5:
    // 1^5 sums to 0 at length 5 = p; 2^5 at length 5; mix forcing length > p:
    auto S = make_sequence(make_group(3, 1), {{1}, {1}, {1}, {1}});
    // zero-sums: any three 1s (length 3 = p). Short must find it.
    auto w = find_zero_sum(S, ZeroSumConstraint::Short);
    REQUIRE(w.has_value());
    CHECK(w->length() <= 3);
  }
  SUBCASE("random witnesses re-verify") {
    std::mt19937_64 rng(31);
    auto g = make_group(5, 2);
    for (int t = 0; t < 200; ++t) {
      auto S = oracle::random_sequence(g, 3 + t % 10, rng);
      auto w = find_zero_sum(S);
      CHECK(w.has_value() == !is_zero_sumfree(S));
      if (w) CHECK(verify_zero_sum_witness(S, *w));
      auto ws = find_zero_sum(S, ZeroSumConstraint::Short);
      if (ws) {
        CHECK(ws->length() <= 5);
        CHECK(verify_zero_sum_witness(S, *ws));
      }
    }
  }
}

TEST_CASE("count_zero_sum_subsequences examples") {
  CHECK(count_zero_sum_subsequences(seq(3, 2, {{1, 0}, {1, 0}, {0, 1}, {0, 1}})) == 1);
  CHECK(count_zero_sum_subsequences(seq(5, 2, {{0, 0}, {0, 0}, {0, 0}})) == 8);
  CHECK(count_zero_sum_subsequences(seq(5, 2, {{1, 2}, {4, 3}})) == 2);
  CHECK(count_zero_sum_subsequences(seq(5, 2, {})) == 1);
}

TEST_CASE("is_minimal_zero_sum") {
  CHECK(is_minimal_zero_sum(make_sequence(make_group(3, 1), {{1}, {2}})));
  SUBCASE("g^p is minimal") {
    auto S = seq(5, 2, {{2, 3}, {2, 3}, {2, 3}, {2, 3}, {2, 3}});
    CHECK(is_minimal_zero_sum(S));
  }
  SUBCASE("a zero entry breaks minimality") {
    auto S = seq(5, 2, {{0, 0}, {1, 2}, {4, 3}});
    CHECK_FALSE(is_minimal_zero_sum(S));
  }
  CHECK_FALSE(is_minimal_zero_sum(seq(3, 2, {})));
  CHECK_FALSE(is_minimal_zero_sum(seq(3, 2, {{1, 0}})));
}

TEST_CASE("width guard on exact counting") {
  auto g = make_group(2, 1);
  std::vector<Element> many(63, Element{0});
  CHECK_THROWS_WITH_AS(count_zero_sum_subsequences(make_sequence(g, many)),
                       doctest::Contains("WidthExceeded"), Error);
}

TEST_CASE("find_index_subset returns valid positions") {
  auto g = make_group(7, 1);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    auto S = oracle::random_sequence(g, 1 + t % 8, rng);
    auto items_seq = expand(S);
    std::vector<i64> items;
    for (const auto& e : items_seq) items.push_back(elem_index(g, e));
    i64 target = static_cast<i64>(rng() % 7);
    auto hit = find_index_subset(g, items, target, -1, -1);
    // cross-check existence against the direct enumeration
    auto direct = oracle::enumerate_subsums(S);
    bool exists = false;
    for (std::size_t k = 1; k < direct.size(); ++k)
      if (direct[k].count(Element{target})) exists = true;
    CHECK(hit.has_value() == exists);
    if (hit) {
      Element acc = zero_of(g);
      for (auto pos : *hit) acc = add(g, acc, items_seq[pos]);
      CHECK(elem_index(g, acc) == target);
      CHECK_FALSE(hit->empty());
    }
  }
}

TEST_CASE("find_index_subset honors exact and bounded cardinality") {
  auto g = make_group(5, 1);
  std::vector<i64> items = {1, 1, 2, 3, 4};
  auto exact3 = find_index_subset(g, items, 0, 3, -1);
  REQUIRE(exact3.has_value());
  CHECK(exact3->size() == 3);
  auto capped = find_index_subset(g, items, 4, -1, 1);
  REQUIRE(capped.has_value());
  CHECK(capped->size() == 1);
  CHECK_FALSE(find_index_subset(g, items, 0, 1, -1).has_value());
}

TEST_CASE("subsequence_from_positions") {
  auto S = seq(3, 2, {{1, 0}, {1, 0}, {0, 1}});
  auto sub = subsequence_from_positions(S, {0, 2});
  CHECK(sub == seq(3, 2, {{1, 0}, {0, 1}}));
  CHECK(divides(sub, S));
}
