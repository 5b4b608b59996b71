#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wbr/groupspec.hpp"

namespace wbr {

// One isomorphism class of transitive G-sets, i.e. a conjugacy class of
// subgroups H with the G-set G/H of size [G : H].
struct FrameNode {
  std::uint32_t id = 0;
  SubgroupRep stab;
  BigInt size;                        // [G : H]
  std::optional<std::uint32_t> level; // homocyclic abelian groups only
  bool cyclic = false;                // H normal with G/H cyclic
};

// The poset of transitive G-sets ordered by existence of a G-map
// (U <= T iff some G-map T -> U exists), together with the map-count table
// phi[t][u] = #Map_G(T, U).
struct Frame {
  GroupSpec spec;
  std::vector<FrameNode> nodes;            // sorted by (size, stab key)
  std::vector<std::vector<char>> leq;      // leq[u][t]: U <= T
  std::vector<std::vector<std::uint32_t>> covers_below;  // maximal nodes < T
  std::vector<std::vector<BigInt>> phi;    // phi[t][u]

  std::size_t node_count() const { return nodes.size(); }
  std::uint32_t bottom() const;  // the one-point G-set
  std::optional<std::uint32_t> find_node(const SubgroupRep& stab) const;

  std::vector<std::uint32_t> downset(std::uint32_t t) const;
  std::vector<std::uint32_t> strict_downset(std::uint32_t t) const;

  // All unordered pairs of distinct nodes with equal size and equal strict
  // downsets.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> linked_pairs() const;

  std::string to_dot() const;
};

Frame build_frame(const GroupSpec& spec);

// Map count #Map_G(G/H, G/K) = #{ gK : g^-1 H g <= K }, computed directly
// from a chosen pair of stabilizers (used as an oracle and by build_frame).
BigInt count_gmaps(const GroupSpec& spec, const SubgroupRep& H,
                   const SubgroupRep& K);

// --- homocyclic level machinery -------------------------------------------

// The level of T: the minimal invariant-factor exponent of the stabilizer
// subgroup H (equivalently, the largest l with H <= p^l * (Z/p^n)^d).
// Defined only for abelian specs with all exponents equal.
std::uint32_t node_level(const Frame& f, std::uint32_t t);

// For T of level l, the node "T-hat" whose stabilizer lattice is p^-l times
// the one of T (a level-0 node).
std::uint32_t scaled_down_node(const Frame& f, std::uint32_t t);

// Nodes U <= T' with the given level and size.
std::vector<std::uint32_t> nodes_below_with(const Frame& f, std::uint32_t t,
                                            std::uint32_t level,
                                            const BigInt& size);

// --- constructions used by the verification suites ------------------------

// For a node T with cyclic quotient in a homocyclic frame (d >= 2), two
// distinct cyclic nodes of size p * #T covering T and linked to each other.
std::pair<std::uint32_t, std::uint32_t> linked_cyclic_cover(const Frame& f,
                                                            std::uint32_t t);

// In the frame of (Z/p^n)^2: the size-p^j pair (T_j, T_j') with
// stabilizer lattices diag(1, p^j) and [[p, 1], [0, p^{j-1}]], linked for
// 2 <= j <= n.
std::pair<std::uint32_t, std::uint32_t> tj_pair(const Frame& f,
                                                std::uint32_t j);

}  // namespace wbr
