#include <doctest.h>

#include "wbr/mpoly.hpp"

using namespace wbr;

TEST_CASE("constant and variable basics") {
  MPoly c = MPoly::constant(5);
  CHECK(c.is_constant());
  CHECK(c.constant_value() == 5);
  CHECK(MPoly::constant(0).is_zero());

  MPoly x = MPoly::variable(0), y = MPoly::variable(1);
  CHECK(!x.is_constant());
  CHECK((x - x).is_zero());
  CHECK(x.total_degree() == 1);
}

TEST_CASE("binomial expansion") {
  MPoly x = MPoly::variable(0), y = MPoly::variable(1);
  MPoly sq = (x + y) * (x + y);
  CHECK(sq == x * x + MPoly::constant(2) * x * y + y * y);
  CHECK(sq.term_count() == 3);
  CHECK(sq == (x + y).pow(2));
  CHECK((x + y).pow(0) == MPoly::constant(1));
}

TEST_CASE("modular coefficients stay canonical") {
  MPoly x = MPoly::variable(0, 5);
  MPoly p = MPoly::constant(4, 5) + MPoly::constant(3, 5);
  CHECK(p.constant_value() == 2);
  CHECK((MPoly::constant(2, 5) * x + MPoly::constant(3, 5) * x).is_zero());
  MPoly neg = -x;
  CHECK(neg.terms().begin()->second == 4);
}

TEST_CASE("mixed-modulus arithmetic is rejected") {
  MPoly a = MPoly::variable(0, 5), b = MPoly::variable(0);
  CHECK_THROWS_AS((void)(a + b), ModulusMismatchError);
  CHECK_THROWS_AS((void)(a * b), ModulusMismatchError);
}

TEST_CASE("exact division") {
  MPoly x = MPoly::variable(0);
  MPoly p = MPoly::constant(6) * x + MPoly::constant(9);
  CHECK(p.exact_div(3) == MPoly::constant(2) * x + MPoly::constant(3));
  CHECK_THROWS_AS(p.exact_div(4), NonIntegralError);
  // The reported witness is the graded-lex-least failing monomial.
  try {
    p.exact_div(2);
    CHECK(false);
  } catch (const NonIntegralError& e) {
    CHECK(std::string(e.what()).find("9") != std::string::npos);
  }
}

TEST_CASE("substitution") {
  MPoly x = MPoly::variable(0), y = MPoly::variable(1);
  MPoly p = x * x + y;
  std::map<VarId, MPoly> img{{0, y}, {1, MPoly::constant(1)}};
  CHECK(p.substitute(img, std::nullopt) == y * y + MPoly::constant(1));

  std::map<VarId, MPoly> partial{{0, y}};
  CHECK_THROWS_AS(p.substitute(partial, std::nullopt), UnboundVariableError);

  // Substitution can move the result into a modular ring.
  MPoly q = MPoly::constant(7) * x;
  std::map<VarId, MPoly> m5{{0, MPoly::constant(1, 5)}};
  CHECK(q.substitute(m5, 5) == MPoly::constant(2, 5));
}

TEST_CASE("reduce and lift round trip") {
  MPoly x = MPoly::variable(0);
  MPoly p = MPoly::constant(7) * x + MPoly::constant(-3);
  MPoly r = p.reduce_mod(5);
  CHECK(r == MPoly::constant(2, 5) * MPoly::variable(0, 5) +
                 MPoly::constant(2, 5));
  MPoly l = r.lift();
  CHECK(!l.modulus());
  CHECK(l.reduce_mod(5) == r);
  // Tower reduction Z/10 -> Z/5 works, Z/10 -> Z/3 does not.
  MPoly t = p.reduce_mod(10);
  CHECK(t.reduce_mod(5) == r);
  CHECK_THROWS_AS(t.reduce_mod(3), ModulusMismatchError);
}

TEST_CASE("rendering is deterministic with largest terms first") {
  MPoly x = MPoly::variable(0), y = MPoly::variable(1);
  MPoly p = y + x * x * y + MPoly::constant(3);
  CHECK(p.str() == "x0^2*x1 + x1 + 3");
}

TEST_CASE("monomial order is graded") {
  Monomial one;
  Monomial x{{{0, 1}}}, y{{{1, 1}}}, x2{{{0, 2}}}, xy{{{0, 1}, {1, 1}}};
  MonomialLess lt;
  CHECK(lt(one, x));
  CHECK(lt(x, y) != lt(y, x));
  CHECK(lt(y, x2));      // degree beats everything
  CHECK(lt(xy, x2));     // at equal degree the earlier variable dominates
  CHECK(!lt(x, x));
}
