#include <doctest.h>

#include <optional>
#include <vector>

#include "wbr/verify.hpp"
#include "wbr/witt.hpp"

using namespace wbr;

namespace {

WittVec rand_over(const Frame& f, std::optional<std::uint64_t> mod, Rng& rng) {
  WittVec a = witt_zero(f, mod);
  for (std::uint32_t t = 0; t < f.node_count(); ++t) {
    BigInt v = BigInt(rng.below(mod ? *mod : 19)) - (mod ? 0 : 9);
    a.coords[t] = MPoly::constant(v, mod);
  }
  return a;
}

}  // namespace

TEST_CASE("ghost components on the length-2 chain") {
  Frame f = build_frame(make_abelian(2, {2}));
  WittVec a = witt_from_ints(f, {1, 1, 1}, std::nullopt);
  auto w = ghost(a);
  CHECK(w[0].constant_value() == 1);
  CHECK(w[1].constant_value() == 3);
  CHECK(w[2].constant_value() == 7);
  WittVec back = ghost_inverse(f, w, std::nullopt);
  CHECK(witt_eq(back, a));
}

TEST_CASE("ghost inversion rejects non-images over Z") {
  Frame f = build_frame(make_abelian(2, {1}));
  std::vector<MPoly> w{MPoly::constant(0), MPoly::constant(1)};
  CHECK_THROWS_AS(ghost_inverse(f, w, std::nullopt), NonIntegralError);
}

TEST_CASE("modular ghost inversion requires invertible diagonal") {
  Frame f = build_frame(make_abelian(2, {1}));
  // phi_T(T) = 2 at the size-2 node: not invertible mod 2 or 4.
  std::vector<MPoly> w{MPoly::constant(1, 2), MPoly::constant(1, 2)};
  CHECK_THROWS_AS(ghost_inverse(f, w, 2), TorsionRingError);
  // Mod 3 the diagonal is a unit and inversion succeeds.
  std::vector<MPoly> w3{MPoly::constant(1, 3), MPoly::constant(0, 3)};
  WittVec a = ghost_inverse(f, w3, 3);
  auto round = ghost(a);
  CHECK(round[0] == w3[0]);
  CHECK(round[1] == w3[1]);
}

TEST_CASE("ring axioms and ghost homomorphism on random triples") {
  Rng rng(7);
  for (GroupSpec G : {make_abelian(2, {2, 2}), make_abelian(3, {2, 2}),
                      make_dihedral(3)}) {
    Frame f = build_frame(G);
    std::uint64_t p = G.prime();
    for (std::optional<std::uint64_t> mod :
         {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{p}}) {
      for (int i = 0; i < 10; ++i) {
        WittVec a = rand_over(f, mod, rng), b = rand_over(f, mod, rng),
                c = rand_over(f, mod, rng);
        CHECK(witt_eq(witt_add(a, b), witt_add(b, a)));
        CHECK(witt_eq(witt_mul(a, b), witt_mul(b, a)));
        CHECK(witt_eq(witt_add(witt_add(a, b), c), witt_add(a, witt_add(b, c))));
        CHECK(witt_eq(witt_mul(witt_mul(a, b), c), witt_mul(a, witt_mul(b, c))));
        CHECK(witt_eq(witt_mul(a, witt_add(b, c)),
                      witt_add(witt_mul(a, b), witt_mul(a, c))));
        CHECK(witt_is_zero(witt_add(a, witt_neg(a))));
        CHECK(witt_eq(witt_sub(a, b), witt_add(a, witt_neg(b))));
        if (!mod) {
          auto wa = ghost(a), wb = ghost(b);
          auto ws = ghost(witt_add(a, b)), wp = ghost(witt_mul(a, b));
          for (std::uint32_t t = 0; t < f.node_count(); ++t) {
            CHECK(ws[t] == wa[t] + wb[t]);
            CHECK(wp[t] == wa[t] * wb[t]);
          }
        }
      }
    }
  }
}

TEST_CASE("characteristic-p results do not depend on the chosen lifts") {
  // Adding m to a lifted coordinate must not change the reduced result.
  Frame f = build_frame(make_abelian(2, {2}));
  WittVec a = witt_from_ints(f, {1, 1, 0}, 2);
  WittVec b = witt_from_ints(f, {1, 0, 1}, 2);
  WittVec prod = witt_mul(a, b);
  WittVec a_shift = witt_from_ints(f, {3, 1, 2}, std::nullopt);
  WittVec b_lift = witt_from_ints(f, {1, 0, 1}, std::nullopt);
  WittVec prod_z = witt_mul(a_shift, b_lift);
  for (std::uint32_t t = 0; t < f.node_count(); ++t)
    CHECK(prod_z.coords[t].reduce_mod(2) == prod.coords[t]);
}

TEST_CASE("teichmuller is multiplicative at the bottom") {
  Frame f = build_frame(make_abelian(3, {1, 1}));
  for (BigInt x : {BigInt(2), BigInt(5)})
    for (BigInt y : {BigInt(3), BigInt(7)}) {
      WittVec wx = teichmuller(f, MPoly::constant(x));
      WittVec wy = teichmuller(f, MPoly::constant(y));
      CHECK(witt_eq(witt_mul(wx, wy), teichmuller(f, MPoly::constant(x * y))));
    }
}

TEST_CASE("disjoint supports add coordinatewise") {
  Rng rng(11);
  Frame f = build_frame(make_abelian(2, {2, 2}));
  for (int i = 0; i < 25; ++i) {
    WittVec a = rand_over(f, std::nullopt, rng);
    WittVec b = rand_over(f, std::nullopt, rng);
    for (std::uint32_t t = 0; t < f.node_count(); ++t)
      (rng.below(2) ? a : b).coords[t] = MPoly(std::optional<std::uint64_t>{});
    WittVec s = witt_add(a, b);
    for (std::uint32_t t = 0; t < f.node_count(); ++t)
      CHECK(s.coords[t] == a.coords[t] + b.coords[t]);
  }
}

TEST_CASE("sums of high-vanishing vectors add coordinatewise at first layer") {
  Rng rng(13);
  Frame f = build_frame(make_abelian(3, {2, 2}));
  BigInt n = 9;  // both vanish below size 9
  for (int i = 0; i < 25; ++i) {
    WittVec a = rand_over(f, std::nullopt, rng);
    WittVec b = rand_over(f, std::nullopt, rng);
    for (std::uint32_t t = 0; t < f.node_count(); ++t)
      if (f.nodes[t].size < n) {
        a.coords[t] = MPoly(std::optional<std::uint64_t>{});
        b.coords[t] = MPoly(std::optional<std::uint64_t>{});
      }
    WittVec s = witt_add(a, b);
    for (std::uint32_t t = 0; t < f.node_count(); ++t)
      if (f.nodes[t].size == n)
        CHECK(s.coords[t] == a.coords[t] + b.coords[t]);
  }
}

TEST_CASE("classical truncated rings are cyclic of order p^(r+1)") {
  for (std::uint32_t p : {2u, 3u})
    for (std::uint32_t r : {1u, 2u, 3u}) {
      Frame f = build_frame(make_abelian(p, {r}));
      WittVec one = teichmuller(f, MPoly::constant(1, std::uint64_t(p)));
      // Additive order of 1 is exactly p^{r+1}.
      CHECK(witt_is_zero(witt_int_scale(big_pow(p, r + 1), one)));
      CHECK(!witt_is_zero(witt_int_scale(big_pow(p, r), one)));
    }
}

TEST_CASE("projection to a down-closed subframe is a ring map") {
  Frame f = build_frame(make_abelian(2, {2, 2}));
  std::vector<std::uint32_t> keep;
  for (std::uint32_t t = 0; t < f.node_count(); ++t)
    if (f.nodes[t].size <= 4) keep.push_back(t);
  Frame sub = subframe(f, keep);
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    WittVec a = rand_over(f, 2, rng), b = rand_over(f, 2, rng);
    CHECK(witt_eq(witt_project(witt_mul(a, b), sub, keep),
                  witt_mul(witt_project(a, sub, keep),
                           witt_project(b, sub, keep))));
    CHECK(witt_eq(witt_project(witt_add(a, b), sub, keep),
                  witt_add(witt_project(a, sub, keep),
                           witt_project(b, sub, keep))));
  }
  // Not-down-closed subsets are rejected.
  std::vector<std::uint32_t> bad{0, static_cast<std::uint32_t>(
                                        f.node_count() - 1)};
  CHECK_THROWS_AS(subframe(f, bad), NotDownClosedError);
}

TEST_CASE("ideal membership predicates") {
  Frame f = build_frame(make_abelian(2, {2, 2}));
  WittVec a = witt_zero(f, 2);
  std::uint32_t top = static_cast<std::uint32_t>(f.node_count() - 1);
  a.coords[top] = MPoly::constant(1, 2);
  CHECK(in_size_ideal(a, 16));
  CHECK(in_size_ideal(a, 2));
  CHECK(!in_size_ideal(witt_from_ints(f, std::vector<BigInt>(f.node_count(), 1), 2), 2));
  CHECK(in_node_ideal(a, f.bottom()));
  CHECK(!in_node_ideal(a, top));
}

TEST_CASE("unit inversion") {
  Frame f = build_frame(make_abelian(3, {1, 1}));
  Rng rng(17);
  WittVec one = teichmuller(f, MPoly::constant(1, 3));
  for (int i = 0; i < 10; ++i) {
    WittVec a = rand_over(f, 3, rng);
    a.coords[f.bottom()] = MPoly::constant(1 + BigInt(rng.below(2)), 3);
    WittVec inv = witt_invert_unit(a);
    CHECK(witt_eq(witt_mul(a, inv), one));
  }
  WittVec nonunit = witt_zero(f, 3);
  CHECK_THROWS_AS(witt_invert_unit(nonunit), NotAUnitError);
}
