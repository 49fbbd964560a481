#include "zslab/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <random>
#include <set>

namespace zslab {

namespace {

using Clock = std::chrono::steady_clock;

i64 mod_p(i64 x, i64 p) {
  i64 m = x % p;
  return m < 0 ? m + p : m;
}

// Expanded element list comparison; (g, 2) sorts before (g, 1)(h, 1) for g < h.
bool expanded_less(const Sequence& a, const Sequence& b) {
  auto ea = expand(a), eb = expand(b);
  return ea < eb;
}

struct DfsContext {
  GroupSpec spec;
  bool symmetry;
  std::uint64_t node_budget;
  Clock::time_point deadline;
  bool has_deadline = false;

  i64 best = 0;
  std::set<std::string> catalog_keys;
  std::vector<Sequence> catalog;
  std::uint64_t nodes = 0;
  bool budget_hit = false;

  bool out_of_budget() {
    if (node_budget && nodes > node_budget) return true;
    if (has_deadline && (nodes & 0xfff) == 0 && Clock::now() > deadline) return true;
    return false;
  }
};

void record(DfsContext& ctx, const std::vector<i64>& cur) {
  std::vector<Element> elems;
  elems.reserve(cur.size());
  for (i64 idx : cur) elems.push_back(elem_at(ctx.spec, idx));
  Sequence S = make_sequence(ctx.spec, elems);
  Sequence canon = canonical_form(S);
  std::string key = serialize(canon);
  if (ctx.catalog_keys.insert(key).second) ctx.catalog.push_back(std::move(canon));
}

// reach = Sigma(prefix) as a flag vector; cur holds element indices,
// non-decreasing. have_x: some chosen element has a nonzero first coordinate.
void dfs(DfsContext& ctx, std::vector<i64>& cur, const std::vector<char>& reach,
         i64 min_next, bool have_x) {
  ++ctx.nodes;
  if (ctx.out_of_budget()) {
    ctx.budget_hit = true;
    return;
  }
  if (static_cast<i64>(cur.size()) > ctx.best) {
    ctx.best = static_cast<i64>(cur.size());
    ctx.catalog.clear();
    ctx.catalog_keys.clear();
  }
  if (static_cast<i64>(cur.size()) == ctx.best && ctx.best > 0) record(ctx, cur);

  const i64 order = ctx.spec.order;
  const i64 p = ctx.spec.p;
  // Index of (1, 0): the least element with nonzero first coordinate.
  const i64 first_x_index = p;
  std::vector<char> next(static_cast<std::size_t>(order));
  for (i64 e = std::max<i64>(min_next, 1); e < order; ++e) {
    if (ctx.budget_hit) return;
    bool e_has_x = (e >= p);
    if (ctx.symmetry) {
      if (cur.empty() && e != 1) break;  // orbit representative: start at (0, 1)
      if (!have_x && e_has_x && e != first_x_index) break;  // stabilizer representative
    }
    // Sigma(cur + e) = Sigma(cur) | (Sigma(cur) + e) | {e}; prune on 0.
    auto index_add = [&](i64 a, i64 b) {
      i64 out = 0, scale = 1, x = a, y = b;
      for (int i = 0; i < ctx.spec.r; ++i) {
        out += ((x % p + y % p) % p) * scale;
        x /= p;
        y /= p;
        scale *= p;
      }
      return out;
    };
    std::copy(reach.begin(), reach.end(), next.begin());
    next[static_cast<std::size_t>(e)] = 1;
    bool zero_hit = false;
    for (i64 g = 0; g < order; ++g) {
      if (reach[static_cast<std::size_t>(g)]) {
        i64 t = index_add(g, e);
        next[static_cast<std::size_t>(t)] = 1;
        if (t == 0) zero_hit = true;
      }
    }
    if (zero_hit || next[0]) continue;
    cur.push_back(e);
    dfs(ctx, cur, next, e, have_x || e_has_x);
    cur.pop_back();
  }
}

}  // namespace

ExtremalCatalog max_zero_sumfree_length(const SearchConfig& config) {
  GroupSpec spec = make_group(config.p, 2);
  if (config.exhaustive && config.p > 5 && !config.allow_large)
    fail(Errc::BudgetExceeded,
         "exhaustive search for p > 5 is off by default (allow_large overrides)");
  DfsContext ctx;
  ctx.spec = spec;
  ctx.symmetry = config.symmetry;
  ctx.node_budget = config.node_budget;
  if (config.time_budget_s > 0) {
    ctx.has_deadline = true;
    ctx.deadline = Clock::now() + std::chrono::milliseconds(
                                      static_cast<long long>(config.time_budget_s * 1000));
  }
  if (config.exhaustive) {
    std::vector<i64> cur;
    std::vector<char> reach(static_cast<std::size_t>(spec.order), 0);
    dfs(ctx, cur, reach, 1, false);
  } else {
    std::mt19937_64 rng(config.seed);
    for (std::uint64_t i = 0; i < config.samples; ++i) {
      // Sampled mode: greedy random growth until stuck, then record.
      std::uint64_t sub_seed = rng();
      auto S = random_zero_sumfree(config.p, 2 * config.p - 2, sub_seed, 1);
      i64 len = 2 * config.p - 2;
      while (!S && len > 0) S = random_zero_sumfree(config.p, --len, sub_seed, 1);
      if (!S) continue;
      if (S->length() > ctx.best) {
        ctx.best = S->length();
        ctx.catalog.clear();
        ctx.catalog_keys.clear();
      }
      if (S->length() == ctx.best) {
        Sequence canon = canonical_form(*S);
        std::string key = serialize(canon);
        if (ctx.catalog_keys.insert(key).second) ctx.catalog.push_back(std::move(canon));
      }
    }
  }
  ExtremalCatalog cat;
  cat.p = config.p;
  cat.max_length = ctx.best;
  cat.extremal = std::move(ctx.catalog);
  cat.exhaustive = config.exhaustive && !ctx.budget_hit;
  cat.nodes = ctx.nodes;
  cat.min_h = 0;
  for (const Sequence& S : cat.extremal) {
    i64 h = h_of(S);
    if (cat.min_h == 0 || h < cat.min_h) cat.min_h = h;
  }
  if (ctx.budget_hit && cat.extremal.empty())
    fail(Errc::BudgetExceeded, "search budget exhausted before any catalog entry");
  return cat;
}

PropertyBReport verify_property_b(const SearchConfig& config) {
  ExtremalCatalog cat = max_zero_sumfree_length(config);
  PropertyBReport rep;
  rep.p = config.p;
  rep.bound = config.p - 2;
  rep.exhaustive = cat.exhaustive;
  rep.catalog_size = static_cast<i64>(cat.extremal.size());
  if (cat.exhaustive && cat.max_length != 2 * config.p - 2)
    fail(Errc::TheoremViolation,
         "max zero-sumfree length is " + std::to_string(cat.max_length) + ", expected 2p-2");
  rep.min_h = cat.min_h;
  for (const Sequence& S : cat.extremal) ++rep.h_histogram[h_of(S)];
  rep.holds = rep.min_h >= rep.bound;
  if (cat.exhaustive && !rep.holds)
    fail(Errc::TheoremViolation, "extremal sequence with h = " + std::to_string(rep.min_h) +
                                     " < p - 2 found");
  return rep;
}

std::optional<Sequence> random_zero_sumfree(i64 p, i64 length, std::uint64_t seed,
                                            int attempt_budget) {
  GroupSpec spec = make_group(p, 2);
  if (length == 0) return Sequence{spec, {}};
  std::mt19937_64 rng(seed);
  std::vector<i64> candidates;
  for (int attempt = 0; attempt < attempt_budget; ++attempt) {
    std::vector<char> reach(static_cast<std::size_t>(spec.order), 0);
    std::vector<Element> chosen;
    for (i64 step = 0; step < length; ++step) {
      candidates.clear();
      for (i64 e = 1; e < spec.order; ++e) {
        // Extending with e keeps the prefix zero-sumfree iff neither e nor
        // any reached value shifted by e lands on 0, i.e. -e is unreached.
        i64 neg_e = elem_index(spec, neg(spec, elem_at(spec, e)));
        if (!reach[static_cast<std::size_t>(neg_e)]) candidates.push_back(e);
      }
      if (candidates.empty()) break;
      i64 e = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
      std::vector<char> next = reach;
      next[static_cast<std::size_t>(e)] = 1;
      for (i64 g = 0; g < spec.order; ++g) {
        if (reach[static_cast<std::size_t>(g)]) {
          i64 t = 0, scale = 1, x = g, y = e;
          for (int i = 0; i < spec.r; ++i) {
            t += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale *= p;
          }
          next[static_cast<std::size_t>(t)] = 1;
        }
      }
      reach.swap(next);
      chosen.push_back(elem_at(spec, e));
    }
    if (static_cast<i64>(chosen.size()) == length) {
      Sequence S = make_sequence(spec, chosen);
      if (is_zero_sumfree(S)) return S;
    }
  }
  return std::nullopt;
}

Sequence apply_automorphism(const Sequence& S, const std::array<std::array<i64, 2>, 2>& m) {
  const i64 p = S.spec.p;
  std::vector<std::pair<Element, i64>> entries;
  entries.reserve(S.entries.size());
  for (const auto& [g, mult] : S.entries) {
    entries.emplace_back(Element{mod_p(m[0][0] * g[0] + m[0][1] * g[1], p),
                                 mod_p(m[1][0] * g[0] + m[1][1] * g[1], p)},
                         mult);
  }
  return make_sequence(S.spec, std::move(entries));
}

bool canonical_is_exact(i64 p) { return p * p * p * p <= 1'000'000; }

Sequence canonical_form(const Sequence& S) {
  if (S.spec.r != 2) fail(Errc::RankUnsupported, "canonical_form requires r = 2");
  const i64 p = S.spec.p;
  if (S.empty()) return S;
  Sequence best = S;
  auto consider = [&](const std::array<std::array<i64, 2>, 2>& m) {
    i64 det = mod_p(m[0][0] * m[1][1] - m[0][1] * m[1][0], p);
    if (det == 0) return;
    Sequence img = apply_automorphism(S, m);
    if (expanded_less(img, best)) best = std::move(img);
  };
  if (canonical_is_exact(p)) {
    for (i64 a = 0; a < p; ++a)
      for (i64 b = 0; b < p; ++b)
        for (i64 c = 0; c < p; ++c)
          for (i64 d = 0; d < p; ++d) consider({{{a, b}, {c, d}}});
    return best;
  }
  // Heuristic above the exact cutoff: only matrices sending some support
  // element to (0, 1); the result may not be the true orbit minimum.
  for (const auto& [g, mult] : S.entries) {
    if (is_zero(g)) continue;
    for (i64 a = 0; a < p; ++a) {
      for (i64 b = 0; b < p; ++b) {
        // Solve m g = (0, 1): first row orthogonal to g, second row hits 1.
        // Parametrize first row (a, b) with <(a,b), g> = 0 checked below.
        if (mod_p(a * g[0] + b * g[1], p) != 0) continue;
        for (i64 c = 0; c < p; ++c) {
          // second row (c, d): c g0 + d g1 = 1
          if (g[1] != 0) {
            // d = (1 - c g0) / g1
            i64 inv = 1;
            for (i64 x = 1; x < p; ++x) {
              if (mod_p(x * g[1], p) == 1) {
                inv = x;
                break;
              }
            }
            i64 d = mod_p((1 - c * g[0]) * inv, p);
            consider({{{a, b}, {c, d}}});
          } else if (mod_p(c * g[0], p) == 1) {
            for (i64 d = 0; d < p; ++d) consider({{{a, b}, {c, d}}});
          }
        }
      }
    }
  }
  return best;
}

}  // namespace zslab
