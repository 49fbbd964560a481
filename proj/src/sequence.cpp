#include "zslab/sequence.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace zslab {

i64 Sequence::length() const {
  i64 total = 0;
  for (const auto& [g, m] : entries) total += m;
  return total;
}

Sequence make_sequence(const GroupSpec& spec, const std::vector<Element>& elems) {
  std::map<Element, i64> mult;
  for (const Element& g : elems) {
    if (static_cast<int>(g.size()) != spec.r)
      fail(Errc::DimensionMismatch, "element rank mismatch");
    for (i64 c : g) {
      if (c < 0 || c >= spec.p) fail(Errc::CoordOutOfRange, "coordinate not in [0, p-1]");
    }
    ++mult[g];
  }
  Sequence S{spec, {}};
  S.entries.assign(mult.begin(), mult.end());
  return S;
}

Sequence make_sequence(const GroupSpec& spec,
                       std::vector<std::pair<Element, i64>> entries) {
  std::map<Element, i64> mult;
  for (auto& [g, m] : entries) {
    if (m < 0) fail(Errc::BadArgument, "negative multiplicity");
    if (m == 0) continue;
    if (static_cast<int>(g.size()) != spec.r)
      fail(Errc::DimensionMismatch, "element rank mismatch");
    for (i64 c : g) {
      if (c < 0 || c >= spec.p) fail(Errc::CoordOutOfRange, "coordinate not in [0, p-1]");
    }
    mult[g] += m;
  }
  Sequence S{spec, {}};
  S.entries.assign(mult.begin(), mult.end());
  return S;
}

std::vector<Element> expand(const Sequence& S) {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(S.length()));
  for (const auto& [g, m] : S.entries) {
    for (i64 i = 0; i < m; ++i) out.push_back(g);
  }
  return out;
}

SeqStats stats(const Sequence& S) {
  SeqStats st;
  st.sigma = zero_of(S.spec);
  for (const auto& [g, m] : S.entries) {
    st.length += m;
    st.h = std::max(st.h, m);
    ++st.supp_size;
    st.sigma = add(S.spec, st.sigma, scalar_mul(S.spec, m, g));
    if (is_zero(g)) st.v0 = m;
  }
  return st;
}

Element sigma(const Sequence& S) { return stats(S).sigma; }

i64 h_of(const Sequence& S) {
  i64 h = 0;
  for (const auto& [g, m] : S.entries) h = std::max(h, m);
  return h;
}

i64 multiplicity_of(const Sequence& S, const Element& g) {
  auto it = std::lower_bound(S.entries.begin(), S.entries.end(), g,
                             [](const auto& e, const Element& x) { return e.first < x; });
  if (it != S.entries.end() && it->first == g) return it->second;
  return 0;
}

Sequence coset_restrict(const Sequence& S, const SubgroupLine& H, const Element& g) {
  if (S.spec.r != 2) fail(Errc::RankUnsupported, "coset_restrict requires r = 2");
  Sequence out{S.spec, {}};
  for (const auto& [x, m] : S.entries) {
    if (line_contains(S.spec, H, sub(S.spec, x, g))) out.entries.emplace_back(x, m);
  }
  return out;
}

Sequence max_squarefree(const Sequence& S) {
  Sequence out{S.spec, {}};
  for (const auto& [g, m] : S.entries) out.entries.emplace_back(g, 1);
  return out;
}

bool is_squarefree(const Sequence& S) {
  for (const auto& [g, m] : S.entries) {
    if (m > 1) return false;
  }
  return true;
}

Sequence translate(const Sequence& S, const Element& g) {
  std::vector<std::pair<Element, i64>> entries;
  entries.reserve(S.entries.size());
  for (const auto& [x, m] : S.entries) entries.emplace_back(add(S.spec, x, g), m);
  return make_sequence(S.spec, std::move(entries));
}

Sequence concat(const Sequence& S, const Sequence& T) {
  if (!(S.spec == T.spec)) fail(Errc::DimensionMismatch, "mismatched groups");
  auto entries = S.entries;
  entries.insert(entries.end(), T.entries.begin(), T.entries.end());
  return make_sequence(S.spec, std::move(entries));
}

bool divides(const Sequence& part, const Sequence& whole) {
  if (!(part.spec == whole.spec)) return false;
  for (const auto& [g, m] : part.entries) {
    if (multiplicity_of(whole, g) < m) return false;
  }
  return true;
}

Sequence divide(const Sequence& whole, const Sequence& part) {
  if (!divides(part, whole)) fail(Errc::NotASubsequence, "divisor is not a subsequence");
  Sequence out{whole.spec, {}};
  for (const auto& [g, m] : whole.entries) {
    i64 rem = m - multiplicity_of(part, g);
    if (rem > 0) out.entries.emplace_back(g, rem);
  }
  return out;
}

Sequence pad_zeros(const Sequence& S, i64 k) {
  if (k < 0) fail(Errc::BadArgument, "negative padding");
  if (k == 0) return S;
  auto entries = S.entries;
  entries.emplace_back(zero_of(S.spec), k);
  return make_sequence(S.spec, std::move(entries));
}

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

Sequence parse_sequence(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  GroupSpec spec;
  std::vector<std::pair<Element, i64>> entries;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::istringstream ls(body);
    if (!have_header) {
      std::string kw;
      i64 p = 0;
      int r = 0;
      if (!(ls >> kw) || kw != "group" || !(ls >> p >> r))
        fail(Errc::HeaderMissing, "expected `group <p> <r>` at line " + std::to_string(lineno));
      std::string extra;
      if (ls >> extra)
        fail(Errc::ParseError, "trailing tokens in header at line " + std::to_string(lineno));
      spec = make_group(p, r);
      have_header = true;
      continue;
    }
    Element g(spec.r);
    for (int i = 0; i < spec.r; ++i) {
      if (!(ls >> g[i]))
        fail(Errc::ParseError, "expected " + std::to_string(spec.r) +
                                   " coordinates at line " + std::to_string(lineno));
      if (g[i] < 0 || g[i] >= spec.p)
        fail(Errc::CoordOutOfRange,
             "coordinate " + std::to_string(g[i]) + " at line " + std::to_string(lineno));
    }
    i64 mult = 1;
    std::string tok;
    if (ls >> tok) {
      if (tok != "*" || !(ls >> mult) || mult < 1)
        fail(Errc::ParseError, "bad multiplicity suffix at line " + std::to_string(lineno));
      if (ls >> tok)
        fail(Errc::ParseError, "trailing tokens at line " + std::to_string(lineno));
    }
    entries.emplace_back(std::move(g), mult);
  }
  if (!have_header) fail(Errc::HeaderMissing, "no `group <p> <r>` line");
  return make_sequence(spec, std::move(entries));
}

std::string serialize(const Sequence& S) {
  std::ostringstream out;
  out << "group " << S.spec.p << ' ' << S.spec.r << '\n';
  for (const auto& [g, m] : S.entries) {
    for (int i = 0; i < S.spec.r; ++i) {
      if (i) out << ' ';
      out << g[i];
    }
    if (m > 1) out << " * " << m;
    out << '\n';
  }
  return out.str();
}

Sequence to_basis_coords(const Sequence& S, const Basis& basis) {
  std::vector<std::pair<Element, i64>> entries;
  entries.reserve(S.entries.size());
  for (const auto& [g, m] : S.entries) {
    auto c = projections(basis, g);
    entries.emplace_back(Element{c[0], c[1]}, m);
  }
  return make_sequence(S.spec, std::move(entries));
}

Sequence from_basis_coords(const Sequence& S, const Basis& basis) {
  std::vector<std::pair<Element, i64>> entries;
  entries.reserve(S.entries.size());
  for (const auto& [g, m] : S.entries)
    entries.emplace_back(recombine(basis, {g[0], g[1]}), m);
  return make_sequence(S.spec, std::move(entries));
}

Sequence project_coord(const Sequence& S, int i) {
  if (i < 0 || i >= S.spec.r) fail(Errc::BadArgument, "coordinate index out of range");
  GroupSpec line = make_group(S.spec.p, 1);
  std::vector<std::pair<Element, i64>> entries;
  for (const auto& [g, m] : S.entries) entries.emplace_back(Element{g[i]}, m);
  return make_sequence(line, std::move(entries));
}

}  // namespace zslab
