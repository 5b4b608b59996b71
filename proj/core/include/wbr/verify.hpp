#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "wbr/frame.hpp"
#include "wbr/witt.hpp"

namespace wbr {

struct VerifyCase {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<VerifyCase> cases;

  bool pass() const {
    for (auto& c : cases)
      if (!c.pass) return false;
    return true;
  }
  void param(std::string k, std::string v) {
    params.emplace_back(std::move(k), std::move(v));
  }
  void add(std::string name, bool ok, std::string detail = "") {
    cases.push_back({std::move(name), ok, std::move(detail)});
  }
  std::string text() const;
  nlohmann::json to_json() const;
};

// Deterministic RNG shared by all randomized suites.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

 private:
  std::mt19937_64 eng_;
};

// Random vector over Z/p with optional forced-zero bottom coordinate.
WittVec random_vec(const Frame& f, std::uint64_t p, Rng& rng,
                   bool zero_bottom);

// For all triples T >= T1, T >= T2 with #T < #T1 * #T2, the integer
// phi_T(T1) phi_T(T2) / phi_T(T) must be divisible by p.
VerifyReport check_ratio_property(const Frame& f);

// Over Z/p: random sums of products of maximal-ideal elements have equal
// coordinates at every linked pair; a one-node bump at a linked node
// violates it.
VerifyReport check_linked_constraints(const Frame& f, std::uint64_t seed,
                                      int trials);

// omega_T(1)^2 = #T * omega_T(1) at every node; exhibits a pair of nonzero
// zero divisors when the frame has more than one size-p node.
VerifyReport check_nondomain(std::uint32_t p, std::uint32_t d,
                             std::uint32_t trunc);

// The square-zero element of the Witt ring of Z/p x Z/p^m over Z/p, p odd.
// On success *witness (if non-null) receives the element.
VerifyReport nilpotent_witness(std::uint32_t p, std::uint32_t m,
                               WittVec* witness = nullptr,
                               const Frame** frame_out = nullptr);

// Elements with opposite coordinates along the two-parameter linked family
// annihilate omega_V(1); plus the linear coordinate relation for ideal
// elements at linked pairs.
VerifyReport check_annihilator(std::uint32_t p, std::uint32_t n,
                               std::uint64_t seed, int trials);

// Square-coordinate formula (v^2)_T = v_{T0}^{2 #T0} for v in the maximal
// ideal, T0 the minimal (level, size) support node.
VerifyReport check_reduced_coordinate(std::uint32_t p, std::uint32_t trunc,
                                      std::uint64_t seed, int trials);

// Products from the size-filtration ideals multiply into the expected
// layer over Z/p; also the characteristic-0 counterexample on the chain.
VerifyReport check_ideal_products(const Frame& f, std::uint32_t m,
                                  std::uint32_t n, std::uint64_t seed,
                                  int trials);

// The chain of cyclic nodes fixed by a surjection onto Z_p: projection onto
// it is the classical truncated Witt ring, and its kernel is nonzero.
VerifyReport prime_ideal_paths(std::uint32_t p, std::uint32_t trunc,
                               std::uint64_t seed, int trials);

}  // namespace wbr
