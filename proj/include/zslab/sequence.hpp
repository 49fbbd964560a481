#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zslab/group.hpp"

namespace zslab {

/// A finite multiset over C_p^r, stored canonically as sorted
/// (element, multiplicity) pairs with multiplicities >= 1.
struct Sequence {
  GroupSpec spec;
  std::vector<std::pair<Element, i64>> entries;

  i64 length() const;
  bool empty() const { return entries.empty(); }

  friend bool operator==(const Sequence&, const Sequence&) = default;
};

struct SeqStats {
  i64 length = 0;
  i64 h = 0;          // max multiplicity
  i64 supp_size = 0;  // |supp(S)|
  Element sigma;      // sum of all entries
  i64 v0 = 0;         // multiplicity of 0
};

Sequence make_sequence(const GroupSpec& spec, const std::vector<Element>& elems);
Sequence make_sequence(const GroupSpec& spec,
                       std::vector<std::pair<Element, i64>> entries);

/// Entries expanded one copy at a time, in canonical order.
std::vector<Element> expand(const Sequence& S);

SeqStats stats(const Sequence& S);
Element sigma(const Sequence& S);
i64 h_of(const Sequence& S);
i64 multiplicity_of(const Sequence& S, const Element& g);

/// Entries of S lying in the coset g + H. r = 2 only.
Sequence coset_restrict(const Sequence& S, const SubgroupLine& H, const Element& g);

/// One copy of each support element.
Sequence max_squarefree(const Sequence& S);
bool is_squarefree(const Sequence& S);

Sequence translate(const Sequence& S, const Element& g);

Sequence concat(const Sequence& S, const Sequence& T);
bool divides(const Sequence& part, const Sequence& whole);
/// Multiset difference whole - part; throws NotASubsequence.
Sequence divide(const Sequence& whole, const Sequence& part);
/// S padded with k copies of 0.
Sequence pad_zeros(const Sequence& S, i64 k);

/// Text format: `group <p> <r>` header, then one element per line as r
/// space-separated residues with an optional ` * <multiplicity>` suffix.
/// `#` starts a comment; blank lines are ignored.
Sequence parse_sequence(const std::string& text);
std::string serialize(const Sequence& S);

/// S rewritten in basis coordinates: each entry g becomes its coefficient
/// vector (c1, c2). A bijection on sequences; from_basis_coords inverts it.
Sequence to_basis_coords(const Sequence& S, const Basis& basis);
Sequence from_basis_coords(const Sequence& S, const Basis& basis);

/// The rank-1 sequence of i-th coordinates (i in [0, r)), over C_p.
Sequence project_coord(const Sequence& S, int i);

}  // namespace zslab
