#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wbr/frame.hpp"
#include "wbr/mpoly.hpp"
#include "wbr/verify.hpp"
#include "wbr/witt.hpp"

namespace wbr {

// Variable ids for the symbolic coordinates: family index in bits 28..31,
// role tag in bits 24..27, node id below.  X/Y are the two generic operands;
// nonzero families X_i/Y_i serve the multi-operand congruences.
enum class VarRole : std::uint32_t { X = 0, Y = 1, Z = 2 };

inline VarId sym_var(VarRole role, std::uint32_t node,
                     std::uint32_t family = 0) {
  return (family << 28) | (static_cast<std::uint32_t>(role) << 24) | node;
}
inline std::uint32_t sym_var_node(VarId v) { return v & 0xffffff; }
std::string sym_var_name(VarId v);

enum class PolyKind { Sum, Product };

// Universal coordinate polynomials of the sum / product of two generic
// elements, one polynomial per node of size <= size_cap.
struct UniversalPolys {
  PolyKind kind = PolyKind::Sum;
  std::vector<std::uint32_t> nodes;  // frame node ids, ascending size
  std::vector<MPoly> polys;          // aligned with nodes; over Z
};

// `order_hint`, when given, must list the kept nodes in some size-respecting
// order; the result is independent of the choice.
UniversalPolys gen_polys(const Frame& f, PolyKind kind, const BigInt& size_cap,
                         const std::vector<std::uint32_t>* order_hint = nullptr);

// Weighted-homogeneity check: with deg X_U = deg Y_U = #U, the sum
// polynomial at T is homogeneous of degree #T and the product one of
// degree 2 #T.
bool check_homogeneity(const Frame& f, const UniversalPolys& u,
                       std::string* what = nullptr);

// Specialization sanity: sum at Y=0 gives X_T; product at Y=0 gives 0.
bool check_specializations(const Frame& f, const UniversalPolys& u,
                           std::string* what = nullptr);

// Named universal congruences, checked as exact polynomial identities mod p
// on the sub-frame of nodes of size <= size_cap (default p^2).
//  - Gen1: for cyclic T and x with x_0 = 0, (x y)_T - X_T Y_0^{#T} mod p
//    uses only variables at nodes strictly below T.
//  - Gen3: on a linked cyclic pair (T, T'), for z = sum_i x_i y_i with
//    x_{i,0} = 0: z_T - z_{T'} = sum_i (X_{i,T} - X_{i,T'}) Y_{i,0}^{#T} mod p.
//  - NiCyclicProd: fully generic x, y on the same pair:
//    z_T - z_{T'} = (X_T - X_{T'}) Y_0^{#T} + (Y_T - Y_{T'}) X_0^{#T} mod p.
//  - PMult: at size-p nodes, (p x)_T = (1 - p^{p-1}) X_0^p + p X_T over Z.
enum class CongruenceKind { Gen1, Gen3, NiCyclicProd, PMult };

struct CongruenceParams {
  std::uint32_t families = 1;            // Gen3 only: number of summands r
  std::optional<BigInt> size_cap;        // default p^2
};

VerifyReport universal_congruence(const Frame& f, CongruenceKind which,
                                  const CongruenceParams& params = {});

}  // namespace wbr
