#include "zslab/group.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace zslab {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::BadRank: return "BadRank";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::RankUnsupported: return "RankUnsupported";
    case Errc::SingularBasis: return "SingularBasis";
    case Errc::ParseError: return "ParseError";
    case Errc::CoordOutOfRange: return "CoordOutOfRange";
    case Errc::HeaderMissing: return "HeaderMissing";
    case Errc::NotASubsequence: return "NotASubsequence";
    case Errc::MemoryCapExceeded: return "MemoryCapExceeded";
    case Errc::BadK: return "BadK";
    case Errc::WidthExceeded: return "WidthExceeded";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::BadLengthForPart3: return "BadLengthForPart3";
    case Errc::EmptySet: return "EmptySet";
    case Errc::BadLength: return "BadLength";
    case Errc::TheoremViolation: return "TheoremViolation";
    case Errc::HasFullLengthZeroSum: return "HasFullLengthZeroSum";
    case Errc::HasShortZeroSum: return "HasShortZeroSum";
    case Errc::LengthGuard: return "LengthGuard";
    case Errc::BadM: return "BadM";
    case Errc::NotFound: return "NotFound";
    case Errc::FeasibilityGuard: return "FeasibilityGuard";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::BadArgument: return "BadArgument";
  }
  return "UnknownError";
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (i64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

GroupSpec make_group(i64 p, int r) {
  if (!is_prime(p)) fail(Errc::NotPrime, "p = " + std::to_string(p));
  if (r < 1) fail(Errc::BadRank, "r = " + std::to_string(r));
  i64 order = 1;
  for (int i = 0; i < r; ++i) {
    if (order > (i64{1} << 62) / p) fail(Errc::BadRank, "p^r exceeds 2^62");
    order *= p;
  }
  return GroupSpec{p, r, order};
}

Element zero_of(const GroupSpec& spec) { return Element(spec.r, 0); }

bool is_zero(const Element& g) {
  for (i64 c : g) {
    if (c != 0) return false;
  }
  return true;
}

namespace {

void check_dim(const GroupSpec& spec, const Element& g) {
  if (static_cast<int>(g.size()) != spec.r)
    fail(Errc::DimensionMismatch, "element has " + std::to_string(g.size()) +
                                      " coordinates, rank is " + std::to_string(spec.r));
}

i64 mod_p(i64 x, i64 p) {
  i64 m = x % p;
  return m < 0 ? m + p : m;
}

// Extended Euclid inverse of a mod p, a != 0 mod p.
i64 inv_mod(i64 a, i64 p) {
  a = mod_p(a, p);
  i64 t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    i64 q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod_p(t, p);
}

}  // namespace

Element add(const GroupSpec& spec, const Element& a, const Element& b) {
  check_dim(spec, a);
  check_dim(spec, b);
  Element out(spec.r);
  for (int i = 0; i < spec.r; ++i) out[i] = mod_p(a[i] + b[i], spec.p);
  return out;
}

Element neg(const GroupSpec& spec, const Element& a) {
  check_dim(spec, a);
  Element out(spec.r);
  for (int i = 0; i < spec.r; ++i) out[i] = mod_p(-a[i], spec.p);
  return out;
}

Element sub(const GroupSpec& spec, const Element& a, const Element& b) {
  check_dim(spec, a);
  check_dim(spec, b);
  Element out(spec.r);
  for (int i = 0; i < spec.r; ++i) out[i] = mod_p(a[i] - b[i], spec.p);
  return out;
}

Element scalar_mul(const GroupSpec& spec, i64 k, const Element& a) {
  check_dim(spec, a);
  Element out(spec.r);
  for (int i = 0; i < spec.r; ++i) out[i] = mod_p(mod_p(k, spec.p) * a[i], spec.p);
  return out;
}

i64 elem_index(const GroupSpec& spec, const Element& g) {
  check_dim(spec, g);
  i64 idx = 0;
  for (int i = 0; i < spec.r; ++i) idx = idx * spec.p + mod_p(g[i], spec.p);
  return idx;
}

Element elem_at(const GroupSpec& spec, i64 index) {
  Element g(spec.r);
  for (int i = spec.r - 1; i >= 0; --i) {
    g[i] = index % spec.p;
    index /= spec.p;
  }
  return g;
}

bool is_principal(const CharacterId& chi) { return is_zero(chi.j); }

i64 dot_mod_p(const GroupSpec& spec, const Element& a, const Element& b) {
  check_dim(spec, a);
  check_dim(spec, b);
  i64 acc = 0;
  for (int i = 0; i < spec.r; ++i) acc = mod_p(acc + a[i] * b[i], spec.p);
  return acc;
}

std::complex<double> character_value(const GroupSpec& spec, const CharacterId& chi,
                                     const Element& g) {
  i64 t = dot_mod_p(spec, chi.j, g);
  if (t == 0) return {1.0, 0.0};
  double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(spec.p);
  return std::polar(1.0, angle);
}

Basis standard_basis(const GroupSpec& spec) {
  if (spec.r != 2) fail(Errc::RankUnsupported, "standard_basis requires r = 2");
  return Basis{spec, Element{1, 0}, Element{0, 1}, {{{1, 0}, {0, 1}}}};
}

Basis change_basis(const GroupSpec& spec, const Element& e1, const Element& e2) {
  if (spec.r != 2) fail(Errc::RankUnsupported, "change_basis requires r = 2");
  check_dim(spec, e1);
  check_dim(spec, e2);
  const i64 p = spec.p;
  // Column matrix A = [e1 e2].
  i64 a = mod_p(e1[0], p), c = mod_p(e1[1], p);
  i64 b = mod_p(e2[0], p), d = mod_p(e2[1], p);
  i64 det = mod_p(a * d - b * c, p);
  if (det == 0) fail(Errc::SingularBasis, "det [e1 e2] = 0 mod p");
  i64 di = inv_mod(det, p);
  Basis basis;
  basis.spec = spec;
  basis.e1 = Element{a, c};
  basis.e2 = Element{b, d};
  basis.inv = {{{mod_p(d * di, p), mod_p(-b * di, p)},
                {mod_p(-c * di, p), mod_p(a * di, p)}}};
  return basis;
}

std::vector<i64> projections(const Basis& basis, const Element& g) {
  check_dim(basis.spec, g);
  const i64 p = basis.spec.p;
  i64 c1 = mod_p(basis.inv[0][0] * g[0] + basis.inv[0][1] * g[1], p);
  i64 c2 = mod_p(basis.inv[1][0] * g[0] + basis.inv[1][1] * g[1], p);
  return {c1, c2};
}

Element recombine(const Basis& basis, const std::vector<i64>& coeffs) {
  if (coeffs.size() != 2) fail(Errc::DimensionMismatch, "need 2 coefficients");
  const i64 p = basis.spec.p;
  return Element{mod_p(coeffs[0] * basis.e1[0] + coeffs[1] * basis.e2[0], p),
                 mod_p(coeffs[0] * basis.e1[1] + coeffs[1] * basis.e2[1], p)};
}

std::vector<SubgroupLine> order_p_subgroups(const GroupSpec& spec) {
  if (spec.r != 2) fail(Errc::RankUnsupported, "order_p_subgroups requires r = 2");
  std::vector<SubgroupLine> lines;
  lines.reserve(static_cast<std::size_t>(spec.p) + 1);
  for (i64 t = 0; t < spec.p; ++t) lines.push_back({Element{1, t}});
  lines.push_back({Element{0, 1}});
  return lines;
}

bool line_contains(const GroupSpec& spec, const SubgroupLine& line, const Element& g) {
  check_dim(spec, g);
  const Element& d = line.direction;
  return mod_p(g[0] * d[1] - g[1] * d[0], spec.p) == 0;
}

Element line_functional(const GroupSpec& spec, const SubgroupLine& line) {
  const i64 p = spec.p;
  const Element& d = line.direction;
  return Element{mod_p(-d[1], p), mod_p(d[0], p)};
}

}  // namespace zslab
