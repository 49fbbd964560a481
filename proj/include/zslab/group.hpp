#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "zslab/errors.hpp"

namespace zslab {

using i64 = std::int64_t;

/// A group element of C_p^r: r residues, each in [0, p-1].
using Element = std::vector<i64>;

/// The ambient elementary abelian group C_p^r.
struct GroupSpec {
  i64 p = 0;
  int r = 0;
  i64 order = 0;  // p^r

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

bool is_prime(i64 n);

/// Throws NotPrime / BadRank.
GroupSpec make_group(i64 p, int r);

Element zero_of(const GroupSpec& spec);
bool is_zero(const Element& g);

Element add(const GroupSpec& spec, const Element& a, const Element& b);
Element neg(const GroupSpec& spec, const Element& a);
Element sub(const GroupSpec& spec, const Element& a, const Element& b);
Element scalar_mul(const GroupSpec& spec, i64 k, const Element& a);

/// Lexicographic rank of g among all p^r elements (first coordinate most
/// significant). elem_at is the inverse.
i64 elem_index(const GroupSpec& spec, const Element& g);
Element elem_at(const GroupSpec& spec, i64 index);

/// A character of C_p^r, indexed by its dual vector j: chi_j(g) = e^{2 pi i <j,g>/p}.
struct CharacterId {
  Element j;
};

bool is_principal(const CharacterId& chi);
i64 dot_mod_p(const GroupSpec& spec, const Element& a, const Element& b);
std::complex<double> character_value(const GroupSpec& spec, const CharacterId& chi,
                                     const Element& g);

/// A basis (e1, e2) of C_p^2 with its precomputed inverse coordinate matrix.
struct Basis {
  GroupSpec spec;
  Element e1, e2;
  std::array<std::array<i64, 2>, 2> inv;  // inverse of the column matrix [e1 e2]
};

Basis standard_basis(const GroupSpec& spec);

/// Throws SingularBasis when det [e1 e2] = 0 mod p; RankUnsupported unless r = 2.
Basis change_basis(const GroupSpec& spec, const Element& e1, const Element& e2);

/// Coefficients (c1, c2) with g = c1 e1 + c2 e2. Exact round-trip with recombine.
std::vector<i64> projections(const Basis& basis, const Element& g);
Element recombine(const Basis& basis, const std::vector<i64>& coeffs);

/// An order-p subgroup of C_p^2, stored by its canonical direction:
/// (1, t) with t in [0, p-1], or (0, 1).
struct SubgroupLine {
  Element direction;
};

/// All p+1 order-p subgroups of C_p^2, canonical directions, in scan order
/// (1,0), (1,1), ..., (1,p-1), (0,1). Throws RankUnsupported unless r = 2.
std::vector<SubgroupLine> order_p_subgroups(const GroupSpec& spec);

bool line_contains(const GroupSpec& spec, const SubgroupLine& line, const Element& g);

/// A nonzero functional j with <j, direction> = 0 mod p; cosets of the line are
/// the level sets of g -> <j, g>.
Element line_functional(const GroupSpec& spec, const SubgroupLine& line);

}  // namespace zslab
