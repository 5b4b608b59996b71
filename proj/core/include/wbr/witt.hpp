#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wbr/frame.hpp"
#include "wbr/mpoly.hpp"

namespace wbr {

// Element of the truncated Witt ring over the given frame.  One coordinate
// per node; all coordinates share the coefficient ring (modulus absent:
// Z or Z[vars]; present: Z/m or (Z/m)[vars]).
struct WittVec {
  const Frame* frame = nullptr;
  std::optional<std::uint64_t> modulus;
  std::vector<MPoly> coords;
};

WittVec witt_zero(const Frame& f, std::optional<std::uint64_t> modulus);
WittVec witt_from_ints(const Frame& f, std::vector<BigInt> values,
                       std::optional<std::uint64_t> modulus);

// Ghost components  w_T(a) = sum_{U <= T} phi_T(U) a_U^{#T / #U}.
std::vector<MPoly> ghost(const WittVec& a);

// Invert the ghost map by size recursion with checked exact division.
// Throws TorsionRingError when some phi_T(T) is not invertible in the
// coefficient ring, NonIntegralError when the input is not a ghost image.
WittVec ghost_inverse(const Frame& f, const std::vector<MPoly>& w,
                      std::optional<std::uint64_t> modulus);

// Ring structure.  Over Z/m the operands are lifted coordinate-wise to Z,
// combined there, and reduced back; this matches the universal polynomials
// because reduction mod m is a ring map applied coordinate-wise.
WittVec witt_add(const WittVec& a, const WittVec& b);
WittVec witt_sub(const WittVec& a, const WittVec& b);
WittVec witt_neg(const WittVec& a);
WittVec witt_mul(const WittVec& a, const WittVec& b);
// n . a  (same as n-fold addition).
WittVec witt_int_scale(const BigInt& n, const WittVec& a);

// Multiplicative lift of c placed at the bottom node: coordinates
// (c, 0, 0, ...) -- ghost components c^{#T}.
WittVec teichmuller(const Frame& f, const MPoly& c);
WittVec teichmuller(const Frame& f, std::uint32_t node, const MPoly& c);

// One step of restriction: forget the coordinates outside a down-closed
// node subset.  `keep` must be down-closed; returns coordinates indexed by
// the sub-frame `sub` whose node i corresponds to keep[i].
WittVec witt_project(const WittVec& a, const Frame& sub,
                     const std::vector<std::uint32_t>& keep);

// Down-closed sub-frame induced on the given nodes (sorted ids).
Frame subframe(const Frame& f, std::vector<std::uint32_t> keep);

// Membership in the two standard chains of ideals.
// size threshold s: all coordinates at nodes with #T < s vanish.
bool in_size_ideal(const WittVec& a, const BigInt& s);
// node threshold: all coordinates at nodes U <= t vanish.
bool in_node_ideal(const WittVec& a, std::uint32_t t);

// Inverse of a unit in W(Z/m) (m = frame prime): requires the bottom
// coordinate invertible mod m; geometric series, terminating because the
// correction term lives above the bottom node and powers climb the size
// filtration.
WittVec witt_invert_unit(const WittVec& a);

bool witt_is_zero(const WittVec& a);
bool witt_eq(const WittVec& a, const WittVec& b);

}  // namespace wbr
