#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wbr/bigint.hpp"
#include "wbr/errors.hpp"

namespace wbr {

using VarId = std::uint32_t;

// Sparse power product: (variable, exponent) pairs sorted by variable id,
// exponents strictly positive.  The empty monomial is 1.
struct Monomial {
  std::vector<std::pair<VarId, std::uint32_t>> exps;

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto& [v, e] : exps) d += e;
    return d;
  }
  std::uint32_t exponent_of(VarId v) const {
    for (auto& [w, e] : exps)
      if (w == v) return e;
    return 0;
  }
  bool operator==(const Monomial& o) const { return exps == o.exps; }
  std::string str(const std::function<std::string(VarId)>& name) const;
};

Monomial monomial_mul(const Monomial& a, const Monomial& b);

// Graded lexicographic order: lower total degree first; ties broken so the
// variable with the smallest id dominates.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Multivariate polynomial with BigInt coefficients, over Z (modulus absent)
// or Z/m (modulus present; coefficients kept in [0, m)).  Zero coefficients
// are never stored.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(std::optional<std::uint64_t> modulus) : modulus_(modulus) {}

  static MPoly constant(BigInt c, std::optional<std::uint64_t> modulus = {});
  static MPoly variable(VarId v, std::optional<std::uint64_t> modulus = {});

  const std::optional<std::uint64_t>& modulus() const { return modulus_; }
  const std::map<Monomial, BigInt, MonomialLess>& terms() const {
    return terms_;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.exps.empty());
  }
  // Requires is_constant().
  BigInt constant_value() const {
    return terms_.empty() ? BigInt(0) : terms_.begin()->second;
  }
  std::uint64_t total_degree() const;
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const BigInt& c);

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly pow(std::uint64_t e) const;
  bool operator==(const MPoly& o) const {
    return modulus_ == o.modulus_ && terms_ == o.terms_;
  }

  // Divide every coefficient by c, throwing NonIntegralError on the
  // graded-lex-least offending monomial.  Only valid over Z.
  MPoly exact_div(const BigInt& c) const;

  // Replace every variable by its image; all variables occurring in the
  // polynomial must be bound.  The result lives over `modulus`.
  MPoly substitute(const std::map<VarId, MPoly>& images,
                   std::optional<std::uint64_t> modulus) const;

  // Coefficient-wise reduction Z -> Z/m (or Z/m -> Z/m' when m' | m).
  MPoly reduce_mod(std::uint64_t m) const;
  // Canonical lift Z/m -> Z using representatives in [0, m).
  MPoly lift() const;

  std::vector<VarId> variables() const;

  std::string str(const std::function<std::string(VarId)>& name) const;
  std::string str() const;  // default names x<id>

 private:
  void normalize_coef(BigInt& c) const {
    if (modulus_) c = mod_reduce(c, BigInt(*modulus_));
  }
  void check_ring(const MPoly& o) const {
    if (modulus_ != o.modulus_) throw ModulusMismatchError();
  }

  std::optional<std::uint64_t> modulus_;
  std::map<Monomial, BigInt, MonomialLess> terms_;
};

}  // namespace wbr
