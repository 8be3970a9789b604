#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "asw/witt.hpp"
#include "support/oracles.hpp"

using namespace asw;

TEST_CASE("C1 values") {
  CHECK(build_c1(Prime(3)).str() == "2*x1^2 + 2*x1");
  CHECK(build_c1_lift(Prime(5)).str() == "-x1^4 + -2*x1^3 + -2*x1^2 + -x1");
  CHECK(build_c1(Prime(5)).str() == "4*x1^4 + 3*x1^3 + 3*x1^2 + 4*x1");
  for (std::int64_t pv : {3, 5, 7, 11}) {
    Prime p(pv);
    ModPoly c1 = build_c1(p);
    CHECK(c1.coeff(Monomial{}) == 0);  // numerator vanishes at x = 0
    CHECK(c1.degree(Var::x1) == static_cast<std::uint32_t>(pv - 1));
  }
}

TEST_CASE("C1 and D1 match the binomial-sum formulas") {
  for (std::int64_t pv : {3, 5, 7, 11, 13}) {
    Prime p(pv);
    CHECK(build_c1_lift(p) == oracle::c1_sum_formula(p));
    CHECK(build_d1_lift(p) == oracle::d1_sum_formula(p));
  }
}

TEST_CASE("D1 values and structure") {
  Prime p3(3);
  CHECK(build_d1(p3).str() == "2*b1*x1^2 + 2*b1^2*x1");

  // D1 with b1 -> 1 collapses to C1
  for (std::int64_t pv : {3, 5, 7}) {
    Prime p(pv);
    std::map<Var, IntPoly> one{{Var::b1, int_constant(1)}};
    CHECK(build_d1_lift(p).substitute(one) == build_c1_lift(p));
  }

  // homogeneous of joint degree p in (x1, b1)
  for (std::int64_t pv : {3, 5, 7}) {
    Prime p(pv);
    ModPoly d1 = build_d1(p);
    for (const auto& [m, c] : d1.terms()) {
      CHECK(m.exp(Var::x1) + m.exp(Var::b1) == static_cast<std::uint32_t>(pv));
    }
  }

  // p = 5 coefficient of x1*b1^4 is -binom(5,1)/5 = -1 = 4 mod 5
  ModPoly d15 = build_d1(Prime(5));
  CHECK(d15.coeff(Monomial::variable(Var::x1) * Monomial::variable(Var::b1, 4)) == 4);
}

TEST_CASE("the two printed forms of D1 agree") {
  // generic form (x^p + (x^p-x)^p - (x + (x^p-x))^p)/p equals the sum form
  // with b1 -> x^p - x, already at the level of integer lifts
  for (std::int64_t pv : {3, 5, 7}) {
    Prime p(pv);
    auto e = static_cast<std::uint64_t>(pv);
    IntPoly x = int_variable(Var::x1);
    IntPoly wpx = int_variable(Var::x1, static_cast<std::uint32_t>(pv)) - x;
    IntPoly generic = exact_div_by(
        int_variable(Var::x1, static_cast<std::uint32_t>(pv)) + wpx.pow(e) - (x + wpx).pow(e),
        pv);
    std::map<Var, IntPoly> sub{{Var::b1, wpx}};
    CHECK(generic == build_d1_lift(p).substitute(sub));
  }
}

TEST_CASE("C2 and D2 at p = 3") {
  Prime p(3);
  auto ws = witt_set(p);

  CHECK(ws->c2.str() ==
        "x1^2*x3^2 + x1*x3^2 + 2*x1^4*x3 + x1^3*x3 + 2*x1^2*x3 + 2*x1^8 + 2*x1^7 + 2*x1^5 + "
        "2*x1^4 + 2*x1^2 + 2*x1");
  CHECK(ws->c2.term_count() == 11);
  CHECK(ws->d2.term_count() == 20);

  // the bare-x3 monomial has coefficient 0; the x3-linear part exists
  CHECK(ws->c2.coeff(Monomial::variable(Var::x3)) == 0);
  CHECK(ws->c2.coeff(Monomial::variable(Var::x1, 4) * Monomial::variable(Var::x3)) == 2);

  // reductions equal reduce_mod of the lifts
  CHECK(ws->c2 == reduce_mod(ws->c2_lift, p));
  CHECK(ws->d2 == reduce_mod(ws->d2_lift, p));
}

TEST_CASE("C2/D2 degree bounds") {
  for (std::int64_t pv : {3, 5}) {
    Prime p(pv);
    auto ws = witt_set(p);
    auto p2 = static_cast<std::uint32_t>(pv * pv);
    CHECK(ws->c2.degree(Var::x1) == p2 - 1);
    CHECK(ws->c2.degree(Var::x3) <= static_cast<std::uint32_t>(pv - 1));
    CHECK(ws->d2.degree(Var::x1) == p2 - 1);
    CHECK(ws->d2.degree(Var::x3) <= static_cast<std::uint32_t>(pv - 1));
    CHECK(ws->c1.degree(Var::x1) == static_cast<std::uint32_t>(pv - 1));
    CHECK(ws->d1.degree(Var::x1) == static_cast<std::uint32_t>(pv - 1));
  }
}

TEST_CASE("D2 numerator vanishes at the origin") {
  for (std::int64_t pv : {3, 5}) {
    Prime p(pv);
    std::map<Var, IntPoly> origin{{Var::x1, IntPoly{}}, {Var::x3, IntPoly{}}};
    CHECK(witt_set(p)->d2_lift.substitute(origin).is_zero());
    CHECK(witt_set(p)->c2_lift.substitute(origin).is_zero());
  }
}

TEST_CASE("integer-lift independence") {
  // replacing the canonical C1 lift by C1 + p*h shifts the C2 numerator by a
  // multiple of p^3, so C2 mod p cannot see the choice of lift
  std::mt19937_64 rng(31337);
  for (std::int64_t pv : {3, 5}) {
    Prime p(pv);
    auto e = static_cast<std::uint64_t>(pv);
    auto p2 = static_cast<std::uint32_t>(pv * pv);
    for (int trial = 0; trial < 5; ++trial) {
      IntPoly h;
      for (int t = 0; t < 3; ++t) {
        h.add_term(Monomial::variable(Var::x1, static_cast<std::uint32_t>(rng() % 4)),
                   Int(static_cast<std::int64_t>(rng() % 7) - 3));
      }
      IntPoly lift = build_c1_lift(p) + h.scaled(pv);
      IntPoly x3 = int_variable(Var::x3);
      IntPoly num = int_variable(Var::x1, p2) + int_constant(1) -
                    (int_variable(Var::x1) + int_constant(1)).pow(e * e) +
                    (x3.pow(e) - (x3 + lift).pow(e)).scaled(pv);
      IntPoly c2_alt = exact_div_by(num, Int(pv) * pv);
      CHECK(reduce_mod(c2_alt, p) == witt_set(p)->c2);

      IntPoly dlift = build_d1_lift(p) + h.scaled(pv);
      IntPoly b3 = int_variable(Var::b3);
      IntPoly dnum = int_variable(Var::x1, p2) + int_variable(Var::b1, p2) -
                     (int_variable(Var::x1) + int_variable(Var::b1)).pow(e * e) +
                     (x3.pow(e) + b3.pow(e) - (x3 + dlift + b3).pow(e)).scaled(pv);
      CHECK(reduce_mod(exact_div_by(dnum, Int(pv) * pv), p) == witt_set(p)->d2);
    }
  }
}
