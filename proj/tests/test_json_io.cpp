#include <doctest.h>

#include "wbr/json_io.hpp"
#include "wbr/verify.hpp"

using namespace wbr;

TEST_CASE("polynomial round trip") {
  MPoly x = MPoly::variable(3), y = MPoly::variable(7);
  MPoly p = MPoly::constant(from_decimal("123456789012345678901234567890")) *
                x * x * y -
            y + MPoly::constant(4);
  json j = poly_to_json(p);
  CHECK(poly_from_json(j) == p);
  // Modular polynomials carry their modulus.
  MPoly q = p.reduce_mod(97);
  CHECK(poly_from_json(poly_to_json(q)) == q);
}

TEST_CASE("group spec round trip") {
  for (GroupSpec G : {make_abelian(3, {2, 1}), make_dihedral(4),
                      make_table(make_abelian(2, {1, 1}).to_table().table)}) {
    json j = spec_to_json(G);
    GroupSpec back = spec_from_json(j);
    CHECK(back.describe() == G.describe());
    CHECK(back.order() == G.order());
  }
}

TEST_CASE("frame dump carries nodes, phi and covers") {
  Frame f = build_frame(make_abelian(2, {1, 1}));
  json j = frame_to_json(f);
  CHECK(j["nodes"].size() == f.node_count());
  CHECK(j["phi"].size() == f.node_count());
  // phi entries are decimal strings.
  CHECK(j["phi"][4][0].get<std::string>() == "1");
  CHECK(j["covers_below"][4].size() == 3);
}

TEST_CASE("witt vector round trip in both rings") {
  Frame f = build_frame(make_abelian(3, {2}));
  Rng rng(9);
  WittVec a = random_vec(f, 3, rng, false);
  json j = witt_to_json(a);
  CHECK(j["ring"] == "Z/3");
  WittVec back = witt_from_json(j, f);
  CHECK(witt_eq(a, back));

  WittVec z = witt_from_ints(f, {BigInt(-5), from_decimal("99999999999999999999"), BigInt(7)},
                             std::nullopt);
  json jz = witt_to_json(z);
  CHECK(jz["ring"] == "Z");
  CHECK(witt_eq(witt_from_json(jz, f), z));
}
