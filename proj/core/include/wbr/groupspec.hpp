#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wbr/bigint.hpp"
#include "wbr/errors.hpp"

namespace wbr {

// Finite abelian p-group  Z/p^{e_1} x ... x Z/p^{e_d},  e_i >= 1.
struct AbelianP {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> exponents;
};

// Dihedral 2-group of order 2^n (n >= 2): N = 2^{n-1} rotations r^k and
// reflections r^k s, with s r s = r^{-1}.
struct Dihedral2 {
  std::uint32_t n = 3;
};

// Arbitrary finite group given by its multiplication table:
// table[a][b] = a*b, identity index 0.
struct CayleyTable {
  std::vector<std::vector<std::uint16_t>> table;
};

struct GroupSpec {
  std::variant<AbelianP, Dihedral2, CayleyTable> g;

  BigInt order() const;
  // The unique prime dividing the order; throws if the order is not a
  // prime power.
  std::uint32_t prime() const;
  bool is_abelian_p() const { return std::holds_alternative<AbelianP>(g); }
  const AbelianP& abelian() const { return std::get<AbelianP>(g); }
  std::string describe() const;
  // Every spec can be materialized as a multiplication table (used by the
  // generic paths and by cross-check oracles).  Throws OrderCapError above
  // `cap` elements.
  CayleyTable to_table(std::uint64_t cap = 4096) const;
};

GroupSpec make_abelian(std::uint32_t p, std::vector<std::uint32_t> exponents);
GroupSpec make_dihedral(std::uint32_t n);
GroupSpec make_table(std::vector<std::vector<std::uint16_t>> table);

// --- subgroup representations ------------------------------------------

// Subgroup of an abelian p-group, encoded as the preimage lattice
// Lambda = diag(p^{e_i}) Z^d  <=  L  <=  Z^d in column-style Hermite normal
// form: upper triangular, h_ii a p-power, 0 <= h_ij < h_ii for j > i.
struct HnfSubgroup {
  std::vector<std::vector<BigInt>> h;  // d x d, row-major
  bool operator==(const HnfSubgroup& o) const { return h == o.h; }
};

// Subgroup of Dihedral2{n}: Rotation d is <r^d>; Mixed (d, i) is <r^d, r^i s>
// with d | 2^{n-1} and 0 <= i < d.
struct DihedralSub {
  enum Kind { Rotation, Mixed } kind = Rotation;
  std::uint64_t d = 1;
  std::uint64_t i = 0;
  bool operator==(const DihedralSub& o) const {
    return kind == o.kind && d == o.d && (kind == Rotation || i == o.i);
  }
};

// Sorted element indices; used for CayleyTable groups.
struct ElementSet {
  std::vector<std::uint16_t> elems;
  bool operator==(const ElementSet& o) const { return elems == o.elems; }
};

struct SubgroupRep {
  std::variant<HnfSubgroup, DihedralSub, ElementSet> s;
  bool operator==(const SubgroupRep& o) const { return s == o.s; }
  // Deterministic serialization; doubles as a sort key.
  std::string key() const;
};

// --- queries -------------------------------------------------------------

// All subgroups, one canonical representative each, sorted by (index in G
// descending ... ) -- callers re-sort; order here is (order, key).
std::vector<SubgroupRep> enumerate_subgroups(const GroupSpec& G);

// Conjugacy-class representatives of subgroups (== enumerate for abelian).
std::vector<SubgroupRep> conjugacy_class_reps(const GroupSpec& G);

BigInt subgroup_order(const GroupSpec& G, const SubgroupRep& H);

// Set containment H <= K (no conjugation).
bool subgroup_contains(const GroupSpec& G, const SubgroupRep& K,
                       const SubgroupRep& H);

// Is some conjugate of H contained in K?
bool conjugate_into(const GroupSpec& G, const SubgroupRep& H,
                    const SubgroupRep& K);

bool is_normal(const GroupSpec& G, const SubgroupRep& H);

// Invariant factor exponents of G/H for abelian G: multiset (a_1 <= ... <=
// a_d) with G/H = prod Z/p^{a_i}, zeros included.
std::vector<std::uint32_t> quotient_invariants(const GroupSpec& G,
                                               const SubgroupRep& H);

// Is the quotient G-set G/H "cyclic", i.e. H normal with G/H cyclic?
bool quotient_cyclic(const GroupSpec& G, const SubgroupRep& H);

// Elements of H as indices into the enumeration order of G.to_table().
std::vector<std::uint16_t> subgroup_elements(const GroupSpec& G,
                                             const SubgroupRep& H);

// --- abelian lattice helpers ---------------------------------------------

// Canonical HNF of the lattice spanned by the given columns together with
// Lambda = diag(p^{e_i}).
HnfSubgroup hnf_from_generators(const AbelianP& A,
                                std::vector<std::vector<BigInt>> columns);

// Smith normal form of a square integer matrix; returns the diagonal
// entries (non-negative, each dividing the next) and, if requested, a
// unimodular P_inv with  span(A) = P_inv * diag * Z^d.
std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m,
                                   std::vector<std::vector<BigInt>>* p_inv =
                                       nullptr);

}  // namespace wbr
