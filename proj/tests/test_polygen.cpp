#include <doctest.h>

#include <algorithm>
#include <map>

#include "wbr/polygen.hpp"

using namespace wbr;

TEST_CASE("bottom polynomials") {
  Frame f = build_frame(make_abelian(2, {1}));
  auto s = gen_polys(f, PolyKind::Sum, 2);
  auto m = gen_polys(f, PolyKind::Product, 2);
  std::uint32_t b = f.bottom();
  MPoly x0 = MPoly::variable(sym_var(VarRole::X, b));
  MPoly y0 = MPoly::variable(sym_var(VarRole::Y, b));
  CHECK(s.polys[0] == x0 + y0);
  CHECK(m.polys[0] == x0 * y0);
}

TEST_CASE("classical p=2 sum polynomial at the size-2 node") {
  Frame f = build_frame(make_abelian(2, {1}));
  auto s = gen_polys(f, PolyKind::Sum, 2);
  REQUIRE(s.nodes.size() == 2);
  std::uint32_t t = s.nodes[1], b = f.bottom();
  MPoly x0 = MPoly::variable(sym_var(VarRole::X, b));
  MPoly y0 = MPoly::variable(sym_var(VarRole::Y, b));
  MPoly xt = MPoly::variable(sym_var(VarRole::X, t));
  MPoly yt = MPoly::variable(sym_var(VarRole::Y, t));
  CHECK(s.polys[1] == xt + yt - x0 * y0);
}

TEST_CASE("maximal-subgroup closed forms") {
  // At any node T whose strict downset is just the bottom:
  //   S_T = X_T + Y_T + (X_0^{#T} + Y_0^{#T} - (X_0+Y_0)^{#T}) / phi_T(T)
  //   M_T = X_0^{#T} Y_T + X_T Y_0^{#T} + phi_T(T) X_T Y_T
  // (the classical first-stage polynomials, forced by the ghost recursion)
  for (GroupSpec G : {make_abelian(3, {1}), make_abelian(2, {1, 1})}) {
    Frame f = build_frame(G);
    BigInt p(G.prime());
    auto s = gen_polys(f, PolyKind::Sum, p);
    auto m = gen_polys(f, PolyKind::Product, p);
    std::uint32_t b = f.bottom();
    MPoly x0 = MPoly::variable(sym_var(VarRole::X, b));
    MPoly y0 = MPoly::variable(sym_var(VarRole::Y, b));
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
      std::uint32_t t = s.nodes[i];
      if (t == b) continue;
      REQUIRE(f.strict_downset(t) == std::vector<std::uint32_t>{b});
      std::uint64_t sz = static_cast<std::uint64_t>(f.nodes[t].size);
      MPoly xt = MPoly::variable(sym_var(VarRole::X, t));
      MPoly yt = MPoly::variable(sym_var(VarRole::Y, t));
      MPoly want_s = xt + yt +
                     (x0.pow(sz) + y0.pow(sz) - (x0 + y0).pow(sz))
                         .exact_div(f.phi[t][t]);
      MPoly want_m = x0.pow(sz) * yt + xt * y0.pow(sz) +
                     MPoly::constant(f.phi[t][t]) * xt * yt;
      CHECK(s.polys[i] == want_s);
      CHECK(m.polys[i] == want_m);
    }
  }
}

TEST_CASE("homogeneity and specializations") {
  for (GroupSpec G : {make_abelian(2, {2}), make_abelian(2, {1, 1}),
                      make_abelian(3, {1, 1})}) {
    Frame f = build_frame(G);
    BigInt cap = BigInt(G.prime()) * G.prime();
    for (PolyKind k : {PolyKind::Sum, PolyKind::Product}) {
      auto u = gen_polys(f, k, cap);
      std::string what;
      CHECK(check_homogeneity(f, u, &what));
      CHECK(what.empty());
      CHECK(check_specializations(f, u, &what));
    }
  }
}

TEST_CASE("recursion order does not matter") {
  Frame f = build_frame(make_abelian(2, {1, 1}));
  auto base = gen_polys(f, PolyKind::Product, 4);
  // Any size-respecting permutation of the kept nodes gives the same result.
  std::vector<std::uint32_t> order = base.nodes;
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (f.nodes[order[i]].size == f.nodes[order[i + 1]].size)
      std::swap(order[i], order[i + 1]);
  auto permuted = gen_polys(f, PolyKind::Product, 4, &order);
  REQUIRE(base.nodes == permuted.nodes);
  for (std::size_t i = 0; i < base.polys.size(); ++i)
    CHECK(base.polys[i] == permuted.polys[i]);
  // Bad hints are rejected.
  std::vector<std::uint32_t> missing(order.begin(), order.end() - 1);
  CHECK_THROWS_AS(gen_polys(f, PolyKind::Product, 4, &missing), Error);
}

TEST_CASE("generated polynomials agree with the arithmetic engine") {
  Frame f = build_frame(make_abelian(2, {2}));
  auto s = gen_polys(f, PolyKind::Sum, 4);
  auto m = gen_polys(f, PolyKind::Product, 4);
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    std::vector<BigInt> av, bv;
    for (std::uint32_t t = 0; t < f.node_count(); ++t) {
      av.push_back(BigInt(rng.below(13)) - 6);
      bv.push_back(BigInt(rng.below(13)) - 6);
    }
    WittVec a = witt_from_ints(f, av, std::nullopt);
    WittVec b = witt_from_ints(f, bv, std::nullopt);
    WittVec sum = witt_add(a, b), prod = witt_mul(a, b);
    std::map<VarId, MPoly> env;
    for (std::uint32_t t = 0; t < f.node_count(); ++t) {
      env[sym_var(VarRole::X, t)] = MPoly::constant(av[t]);
      env[sym_var(VarRole::Y, t)] = MPoly::constant(bv[t]);
    }
    for (std::size_t j = 0; j < s.nodes.size(); ++j) {
      CHECK(s.polys[j].substitute(env, std::nullopt) ==
            sum.coords[s.nodes[j]]);
      CHECK(m.polys[j].substitute(env, std::nullopt) ==
            prod.coords[s.nodes[j]]);
    }
  }
}

TEST_CASE("mod-p collapse keeps the leading coordinate") {
  Frame f = build_frame(make_abelian(3, {1, 1}));
  auto s = gen_polys(f, PolyKind::Sum, 9);
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    std::map<VarId, MPoly> kill;
    for (auto t : s.nodes) {
      kill[sym_var(VarRole::X, t)] = MPoly::variable(sym_var(VarRole::X, t), 3);
      kill[sym_var(VarRole::Y, t)] = MPoly(std::optional<std::uint64_t>{3});
    }
    CHECK(s.polys[i].reduce_mod(3).substitute(kill, 3) ==
          MPoly::variable(sym_var(VarRole::X, s.nodes[i]), 3));
  }
}

TEST_CASE("universal congruences on small square frames") {
  for (std::uint32_t p : {2u, 3u}) {
    Frame f = build_frame(make_abelian(p, {2, 2}));
    CHECK(universal_congruence(f, CongruenceKind::Gen1).pass());
    CongruenceParams prm;
    prm.families = 2;
    CHECK(universal_congruence(f, CongruenceKind::Gen3).pass());
    CHECK(universal_congruence(f, CongruenceKind::Gen3, prm).pass());
    CHECK(universal_congruence(f, CongruenceKind::NiCyclicProd).pass());
    CHECK(universal_congruence(f, CongruenceKind::PMult).pass());
  }
  Frame d = build_frame(make_dihedral(3));
  CHECK_THROWS_AS(universal_congruence(d, CongruenceKind::Gen1),
                  NonAbelianError);
}

TEST_CASE("size cap is enforced") {
  Frame f = build_frame(make_abelian(2, {2, 2}));
  CongruenceParams prm;
  prm.size_cap = BigInt(100);
  CHECK_THROWS_AS(universal_congruence(f, CongruenceKind::Gen1, prm),
                  SizeCapError);
}

TEST_CASE("variable names") {
  CHECK(sym_var_name(sym_var(VarRole::X, 3)) == "X3");
  CHECK(sym_var_name(sym_var(VarRole::Y, 0)) == "Y0");
  CHECK(sym_var_name(sym_var(VarRole::X, 4, 2)) == "X2_4");
  CHECK(sym_var_node(sym_var(VarRole::Y, 7, 3)) == 7);
}
