#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "asw/polynomial.hpp"
#include "support/oracles.hpp"

using namespace asw;

TEST_CASE("prime validation") {
  CHECK(Prime(3).value() == 3);
  CHECK(Prime(13).value() == 13);
  CHECK_THROWS_AS(Prime(2), InvalidPrimeError);
  CHECK_THROWS_AS(Prime(4), InvalidPrimeError);
  CHECK_THROWS_AS(Prime(1), InvalidPrimeError);
  CHECK_THROWS_AS(Prime(9), InvalidPrimeError);
  CHECK_THROWS_WITH(Prime(4), Catch::Matchers::ContainsSubstring("odd prime"));
}

TEST_CASE("prime field arithmetic") {
  Prime p(7);
  CHECK(p.reduce(-1) == 6);
  CHECK(p.inv(2) == 4);
  CHECK(p.mul(p.inv(3), 3) == 1);
  CHECK(p.pow(3, 6) == 1);
}

TEST_CASE("quadratic non-residue") {
  CHECK(quadratic_nonresidue(Prime(3)) == 2);
  CHECK(quadratic_nonresidue(Prime(5)) == 2);
  CHECK(quadratic_nonresidue(Prime(7)) == 3);
  CHECK(quadratic_nonresidue(Prime(11)) == 2);
  CHECK(quadratic_nonresidue(Prime(13)) == 2);
  // definition check: alpha^((p-1)/2) = -1
  for (std::int64_t pv : {3, 5, 7, 11, 13}) {
    Prime p(pv);
    auto a = quadratic_nonresidue(p);
    CHECK(p.pow(a, static_cast<std::uint64_t>((pv - 1) / 2)) == pv - 1);
  }
}

TEST_CASE("monomial order and printing") {
  auto x1 = Monomial::variable(Var::x1);
  auto b1 = Monomial::variable(Var::b1);
  auto b1sq_x1 = Monomial::variable(Var::b1, 2) * x1;
  auto b1_x1sq = b1 * Monomial::variable(Var::x1, 2);
  CHECK(b1_x1sq.compare(b1sq_x1) > 0);  // x1 outranks b1
  CHECK(Monomial::variable(Var::x4).compare(Monomial::variable(Var::x3, 9)) > 0);
  CHECK(Monomial::variable(Var::b4).compare(Monomial::variable(Var::b3, 9)) > 0);
  CHECK(x1.compare(Monomial::variable(Var::b4, 5)) > 0);
  CHECK(b1sq_x1.str() == "b1^2*x1");
  CHECK(Monomial{}.str().empty());
}

TEST_CASE("basic ring operations") {
  IntPoly x1 = int_variable(Var::x1);
  IntPoly one = int_constant(1);
  CHECK(((x1 + one) * (x1 - one)).str() == "x1^2 + -1");

  std::map<Var, IntPoly> shift{{Var::x1, x1 + one}};
  CHECK(int_variable(Var::x1, 2).substitute(shift).str() == "x1^2 + 2*x1 + 1");

  Prime p3(3);
  ModPoly mx1 = mod_variable(p3, Var::x1);
  CHECK((mx1 + mod_constant(p3, 1)).pow(3).str() == "x1^3 + 1");
}

TEST_CASE("modulus mismatch is rejected") {
  ModPoly f = mod_variable(Prime(3), Var::x1);
  ModPoly g = mod_variable(Prime(5), Var::x1);
  CHECK_THROWS_AS(f + g, ModulusMismatchError);
  CHECK_THROWS_AS(f * g, ModulusMismatchError);
}

TEST_CASE("exact division") {
  IntPoly f = int_variable(Var::x1).scaled(3) + int_constant(6);
  CHECK(exact_div_by(f, 3).str() == "x1 + 2");

  // x^9 + 1 - (x+1)^9 has the coefficient -binom(9,3) = -84 at x^3,
  // and 84 is not a multiple of 9
  IntPoly num = int_variable(Var::x1, 9) + int_constant(1) -
                (int_variable(Var::x1) + int_constant(1)).pow(9);
  CHECK(num.coeff(Monomial::variable(Var::x1, 3)) == -84);
  try {
    exact_div_by(num, 9);
    FAIL("expected NonDivisibleError");
  } catch (const NonDivisibleError& e) {
    CHECK(e.divisor == "9");
    CHECK(e.coefficient == "-84");
  }

  // C1 numerator for p = 5 divides exactly
  IntPoly num5 = int_variable(Var::x1, 5) + int_constant(1) -
                 (int_variable(Var::x1) + int_constant(1)).pow(5);
  CHECK(exact_div_by(num5, 5).str() == "-x1^4 + -2*x1^3 + -2*x1^2 + -x1");

  CHECK_THROWS_AS(exact_div_by(f, 0), Error);
}

TEST_CASE("reduce_mod") {
  Prime p3(3);
  IntPoly f = int_variable(Var::x1).scaled(3) + int_constant(4);
  CHECK(reduce_mod(f, p3).str() == "1");
  IntPoly g = int_variable(Var::x1).scaled(4);
  CHECK(reduce_mod(g, p3).str() == "x1");
  IntPoly h = -int_variable(Var::x1, 2) - int_variable(Var::x1);
  CHECK(reduce_mod(h, p3).str() == "2*x1^2 + 2*x1");
  CHECK(reduce_mod(int_variable(Var::x1, 3).scaled(84), p3).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(20260809);
  Prime p5(5);
  for (int trial = 0; trial < 60; ++trial) {
    IntPoly f = oracle::random_int_poly(rng);
    IntPoly g = oracle::random_int_poly(rng);
    IntPoly h = oracle::random_int_poly(rng);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f - f).is_zero());

    ModPoly mf = oracle::random_mod_poly(rng, p5);
    ModPoly mg = oracle::random_mod_poly(rng, p5);
    ModPoly mh = oracle::random_mod_poly(rng, p5);
    CHECK(mf * (mg + mh) == mf * mg + mf * mh);
    CHECK((mf * mg) * mh == mf * (mg * mh));
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(42);
  Prime p3(3);
  for (int trial = 0; trial < 40; ++trial) {
    IntPoly f = oracle::random_int_poly(rng, 4, 2, 4);
    IntPoly g = oracle::random_int_poly(rng, 4, 2, 4);
    std::map<Var, IntPoly> assign{
        {Var::x1, oracle::random_int_poly(rng, 2, 2, 3)},
        {Var::x2, oracle::random_int_poly(rng, 2, 2, 3)},
        {Var::b1, oracle::random_int_poly(rng, 2, 2, 3)},
    };
    CHECK((f * g).substitute(assign) == f.substitute(assign) * g.substitute(assign));
    CHECK((f + g).substitute(assign) == f.substitute(assign) + g.substitute(assign));

    ModPoly mf = oracle::random_mod_poly(rng, p3);
    ModPoly mg = oracle::random_mod_poly(rng, p3);
    std::map<Var, ModPoly> massign{{Var::x1, oracle::random_mod_poly(rng, p3, 3, 2)},
                                   {Var::b2, oracle::random_mod_poly(rng, p3, 3, 2)}};
    CHECK((mf * mg).substitute(massign) == mf.substitute(massign) * mg.substitute(massign));
  }
}

TEST_CASE("exact division agrees with rational arithmetic") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    IntPoly g = oracle::random_int_poly(rng);
    std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 11);
    IntPoly f = g.scaled(d);
    auto viaq = oracle::rational_div(f, d);
    REQUIRE(viaq.has_value());
    CHECK(exact_div_by(f, d) == *viaq);
    CHECK(reduce_mod(exact_div_by(f, d), Prime(5)) == reduce_mod(*viaq, Prime(5)));
  }
}

TEST_CASE("canonical serialization round-trips") {
  std::mt19937_64 rng(99);
  Prime p7(7);
  for (int trial = 0; trial < 60; ++trial) {
    IntPoly f = oracle::random_int_poly(rng);
    CHECK(IntPoly::parse(IntegerRing{}, f.str()) == f);
    ModPoly mf = oracle::random_mod_poly(rng, p7);
    CHECK(ModPoly::parse(PrimeField(p7), mf.str()) == mf);
  }
  // the grammar example parses to the canonical descending form
  ModPoly d1 = ModPoly::parse(PrimeField(Prime(3)), "2*b1^2*x1 + 2*b1*x1^2");
  CHECK(d1.str() == "2*b1*x1^2 + 2*b1^2*x1");
  CHECK(IntPoly::parse(IntegerRing{}, "0").is_zero());
  CHECK_THROWS_AS(IntPoly::parse(IntegerRing{}, "2*y1"), ParseError);
  CHECK_THROWS_AS(IntPoly::parse(IntegerRing{}, ""), ParseError);
}
