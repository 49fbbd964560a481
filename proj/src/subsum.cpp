#include "zslab/subsum.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace zslab {

std::size_t memory_cap() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("ZSLAB_MEM_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{256} * 1024 * 1024;
  }();
  return cap;
}

namespace {

// Index-space addition: idx(a) and idx(b) combine coordinatewise mod p.
i64 index_add(const GroupSpec& spec, i64 a, i64 b) {
  i64 out = 0, scale = 1;
  for (int i = 0; i < spec.r; ++i) {
    i64 ca = a % spec.p, cb = b % spec.p;
    out += ((ca + cb) % spec.p) * scale;
    a /= spec.p;
    b /= spec.p;
    scale *= spec.p;
  }
  return out;
}

void check_table_memory(const GroupSpec& spec, i64 s) {
  auto cells = static_cast<std::size_t>(s + 1) * static_cast<std::size_t>(spec.order);
  if (cells > memory_cap())
    fail(Errc::MemoryCapExceeded,
         std::to_string(cells) + " cells exceed cap " + std::to_string(memory_cap()));
}

std::vector<i64> expanded_indices(const Sequence& S) {
  std::vector<i64> items;
  items.reserve(static_cast<std::size_t>(S.length()));
  for (const auto& [g, m] : S.entries) {
    i64 idx = elem_index(S.spec, g);
    for (i64 i = 0; i < m; ++i) items.push_back(idx);
  }
  return items;
}

void absorb_item(const GroupSpec& spec, std::vector<std::vector<char>>& reach, i64 filled,
                 i64 item) {
  // Process layers top-down so each copy is used at most once.
  for (i64 c = filled; c >= 0; --c) {
    const auto& src = reach[static_cast<std::size_t>(c)];
    auto& dst = reach[static_cast<std::size_t>(c + 1)];
    for (i64 g = 0; g < spec.order; ++g) {
      if (src[static_cast<std::size_t>(g)]) dst[static_cast<std::size_t>(index_add(spec, g, item))] = 1;
    }
  }
}

}  // namespace

SubsumTable build_table_items(const GroupSpec& spec, const std::vector<i64>& items) {
  const i64 s = static_cast<i64>(items.size());
  check_table_memory(spec, s);
  SubsumTable table{spec, s, {}};
  table.reach.assign(static_cast<std::size_t>(s + 1),
                     std::vector<char>(static_cast<std::size_t>(spec.order), 0));
  table.reach[0][0] = 1;
  for (i64 i = 0; i < s; ++i) absorb_item(spec, table.reach, i, items[static_cast<std::size_t>(i)]);
  return table;
}

SubsumTable build_table(const Sequence& S) {
  return build_table_items(S.spec, expanded_indices(S));
}

std::set<Element> subsums(const Sequence& S, SubsumKind kind, i64 k) {
  const i64 s = S.length();
  i64 lo = 1, hi = s;
  if (kind != SubsumKind::All) {
    if (k < 1 || k > s) fail(Errc::BadK, "k = " + std::to_string(k) + ", |S| = " + std::to_string(s));
    lo = (kind == SubsumKind::Exact) ? k : 1;
    hi = k;
  }
  SubsumTable table = build_table(S);
  std::set<Element> out;
  for (i64 c = lo; c <= hi; ++c) {
    for (i64 g = 0; g < S.spec.order; ++g) {
      if (table.at(c, g)) out.insert(elem_at(S.spec, g));
    }
  }
  return out;
}

bool is_zero_sumfree(const Sequence& S) {
  SubsumTable table = build_table(S);
  for (i64 c = 1; c <= table.s; ++c) {
    if (table.at(c, 0)) return false;
  }
  return true;
}

namespace {

// Backward trace through layered tables. Stores all prefix tables when they
// fit under the memory cap, otherwise rebuilds each prefix from scratch.
class PrefixTrace {
 public:
  PrefixTrace(const GroupSpec& spec, const std::vector<i64>& items)
      : spec_(spec), items_(items) {
    const auto s = items.size();
    auto cells = (s + 1) * (s + 1) * static_cast<std::size_t>(spec.order);
    store_all_ = cells <= memory_cap();
    if (store_all_) {
      tables_.reserve(s + 1);
      tables_.push_back(empty_table());
      for (std::size_t i = 0; i < s; ++i) {
        tables_.push_back(tables_.back());
        absorb_item(spec_, tables_.back(), static_cast<i64>(i), items_[i]);
      }
    }
  }

  bool reachable(std::size_t prefix, i64 c, i64 gidx) const {
    if (c < 0 || c > static_cast<i64>(prefix)) return false;
    if (store_all_)
      return tables_[prefix][static_cast<std::size_t>(c)][static_cast<std::size_t>(gidx)] != 0;
    auto table = empty_table();
    for (std::size_t i = 0; i < prefix; ++i) absorb_item(spec_, table, static_cast<i64>(i), items_[i]);
    return table[static_cast<std::size_t>(c)][static_cast<std::size_t>(gidx)] != 0;
  }

  // Positions of items forming a subset of cardinality len with sum target.
  std::vector<std::size_t> trace(i64 len, i64 target) const {
    std::vector<std::size_t> chosen;
    i64 c = len, g = target;
    for (std::size_t i = items_.size(); i > 0; --i) {
      if (reachable(i - 1, c, g)) continue;  // item i-1 not needed
      chosen.push_back(i - 1);
      i64 prev = 0, scale = 1, a = g, b = items_[i - 1];
      for (int d = 0; d < spec_.r; ++d) {
        i64 ca = a % spec_.p, cb = b % spec_.p;
        prev += ((ca - cb + spec_.p) % spec_.p) * scale;
        a /= spec_.p;
        b /= spec_.p;
        scale *= spec_.p;
      }
      g = prev;
      --c;
    }
    std::reverse(chosen.begin(), chosen.end());
    return chosen;
  }

 private:
  std::vector<std::vector<char>> empty_table() const {
    std::vector<std::vector<char>> table(items_.size() + 1,
                                         std::vector<char>(static_cast<std::size_t>(spec_.order), 0));
    table[0][0] = 1;
    return table;
  }

  GroupSpec spec_;
  std::vector<i64> items_;
  bool store_all_ = false;
  std::vector<std::vector<std::vector<char>>> tables_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_index_subset(const GroupSpec& spec,
                                                          const std::vector<i64>& items,
                                                          i64 target_idx, i64 exact_len,
                                                          i64 max_len) {
  const i64 s = static_cast<i64>(items.size());
  check_table_memory(spec, s);
  SubsumTable table = build_table_items(spec, items);
  i64 len = -1;
  if (exact_len >= 0) {
    if (exact_len > s) return std::nullopt;
    if (table.at(exact_len, target_idx)) len = exact_len;
  } else {
    i64 hi = (max_len >= 0) ? std::min(max_len, s) : s;
    for (i64 c = 1; c <= hi; ++c) {
      if (table.at(c, target_idx)) {
        len = c;
        break;
      }
    }
  }
  if (len < 0) return std::nullopt;
  if (len == 0) return std::vector<std::size_t>{};
  PrefixTrace trace(spec, items);
  return trace.trace(len, target_idx);
}

Sequence subsequence_from_positions(const Sequence& S,
                                    const std::vector<std::size_t>& positions) {
  auto items = expand(S);
  std::vector<Element> chosen;
  chosen.reserve(positions.size());
  for (std::size_t pos : positions) chosen.push_back(items.at(pos));
  return make_sequence(S.spec, chosen);
}

std::optional<Sequence> find_zero_sum(const Sequence& S, ZeroSumConstraint constraint,
                                      i64 len) {
  const i64 s = S.length();
  i64 exact = -1, cap = -1;
  switch (constraint) {
    case ZeroSumConstraint::Any:
      break;
    case ZeroSumConstraint::ExactLength:
      if (len < 1 || len > s) fail(Errc::BadK, "exact length " + std::to_string(len));
      exact = len;
      break;
    case ZeroSumConstraint::Short:
      cap = S.spec.p;  // adopted convention: short = length <= exp(G) = p
      break;
  }
  auto items = expanded_indices(S);
  auto positions = find_index_subset(S.spec, items, 0, exact, cap);
  if (!positions || positions->empty()) return std::nullopt;
  return subsequence_from_positions(S, *positions);
}

std::uint64_t count_zero_sum_subsequences(const Sequence& S) {
  const i64 s = S.length();
  if (s > 62) fail(Errc::WidthExceeded, "|S| = " + std::to_string(s) + " > 62");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(S.spec.order), 0);
  counts[0] = 1;
  std::vector<std::uint64_t> next(counts.size());
  for (i64 item : expanded_indices(S)) {
    for (i64 g = 0; g < S.spec.order; ++g)
      next[static_cast<std::size_t>(index_add(S.spec, g, item))] = counts[static_cast<std::size_t>(g)];
    for (i64 g = 0; g < S.spec.order; ++g) counts[static_cast<std::size_t>(g)] += next[static_cast<std::size_t>(g)];
  }
  return counts[0];
}

bool is_minimal_zero_sum(const Sequence& S) {
  if (S.empty()) return false;
  if (!is_zero(sigma(S))) return false;
  SubsumTable table = build_table(S);
  for (i64 c = 1; c < table.s; ++c) {
    if (table.at(c, 0)) return false;
  }
  return true;
}

bool verify_zero_sum_witness(const Sequence& S, const Sequence& w) {
  return !w.empty() && divides(w, S) && is_zero(sigma(w));
}

}  // namespace zslab
