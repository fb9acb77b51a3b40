#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "qcommute/field.hpp"
#include "qcommute/fieldpoly.hpp"

using namespace qcommute;

TEST_SUITE("fieldpoly") {

TEST_CASE("construction normalizes trailing zeros") {
  auto f = Field::make(3);
  FieldPoly p(f, {1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(p.coeffs() == std::vector<std::uint32_t>{1, 2});
  CHECK(FieldPoly(f, {0, 0}).is_zero());
  CHECK_FALSE(FieldPoly(f).degree().has_value());
  CHECK(FieldPoly::one(f).is_one());
  CHECK(FieldPoly::t(f).degree() == 1);
  CHECK(FieldPoly::monomial(f, 3, 2).coeffs() == std::vector<std::uint32_t>{0, 0, 0, 2});
  CHECK(FieldPoly::constant(f, 2).degree() == 0);
}

TEST_CASE("coefficient access and monic scaling") {
  auto f = Field::make(5);
  FieldPoly p(f, {1, 0, 3});  // 3t^2 + 1
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == 3);
  CHECK(p.coeff(7) == 0);  // past the leading term
  CHECK(p.leading() == 3);
  CHECK_FALSE(p.is_monic());
  FieldPoly m = p.monic();
  CHECK(m.is_monic());
  // 3^{-1} = 2 mod 5, so monic form is t^2 + 2.
  CHECK(m.coeffs() == std::vector<std::uint32_t>{2, 0, 1});
  CHECK(p.scaled(2).coeffs() == std::vector<std::uint32_t>{2, 0, 1});
  CHECK_THROWS(FieldPoly(f).leading());
  CHECK_THROWS(FieldPoly(f).monic());
}

TEST_CASE("ring arithmetic") {
  auto f = Field::make(3);
  FieldPoly a(f, {1, 1});      // t + 1
  FieldPoly b(f, {2, 1});      // t + 2
  FieldPoly prod = a * b;      // t^2 + 3t + 2 = t^2 + 2
  CHECK(prod.coeffs() == std::vector<std::uint32_t>{2, 0, 1});
  CHECK((a + b).coeffs() == std::vector<std::uint32_t>{0, 2});
  CHECK((a - a).is_zero());
  CHECK(a * FieldPoly(f) == FieldPoly(f));
  CHECK(a * FieldPoly::one(f) == a);
  // (t+1)^3 = t^3 + 1 in characteristic 3.
  CHECK((a * a * a).coeffs() == std::vector<std::uint32_t>{1, 0, 0, 1});
}

TEST_CASE("divmod satisfies the division law exhaustively over GF(5)") {
  auto f = Field::make(5);
  // All num of degree <= 2 against all nonzero den of degree <= 1.
  for (std::uint32_t c0 = 0; c0 < 5; ++c0)
    for (std::uint32_t c1 = 0; c1 < 5; ++c1)
      for (std::uint32_t c2 = 0; c2 < 5; ++c2) {
        FieldPoly num(f, {c0, c1, c2});
        for (std::uint32_t d0 = 0; d0 < 5; ++d0)
          for (std::uint32_t d1 = 0; d1 < 5; ++d1) {
            FieldPoly den(f, {d0, d1});
            if (den.is_zero()) continue;
            auto [quo, rem] = FieldPoly::divmod(num, den);
            CHECK(quo * den + rem == num);
            if (!rem.is_zero()) {
              REQUIRE(den.degree().has_value());
              CHECK(rem.degree().value_or(0) < den.degree().value());
            }
          }
      }
  CHECK_THROWS(FieldPoly::divmod(FieldPoly::one(f), FieldPoly(f)));
}

TEST_CASE("gcd is monic and correct on factored inputs") {
  auto f = Field::make(3);
  FieldPoly t = FieldPoly::t(f);
  FieldPoly tp1(f, {1, 1});
  FieldPoly tm1(f, {2, 1});
  // gcd(t^2 - 1, t^2 + t) = gcd((t-1)(t+1), t(t+1)) = t + 1.
  CHECK(FieldPoly::gcd(tm1 * tp1, t * tp1) == tp1);
  // gcd of coprime polynomials is 1.
  CHECK(FieldPoly::gcd(t, tp1).is_one());
  // gcd result is monic even when inputs are not.
  CHECK(FieldPoly::gcd(tp1.scaled(2), tp1.scaled(2)) == tp1);
  CHECK(FieldPoly::gcd(FieldPoly(f), FieldPoly(f)).is_zero());
  CHECK(FieldPoly::gcd(FieldPoly(f), tp1) == tp1);
}

TEST_CASE("divides") {
  auto f = Field::make(2);
  FieldPoly t = FieldPoly::t(f);
  FieldPoly tp1(f, {1, 1});
  CHECK(tp1.divides(tp1 * tp1));
  CHECK(t.divides(t * tp1));
  CHECK_FALSE(tp1.divides(t));
}

TEST_CASE("eval and compose_scaled_arg") {
  auto f = Field::make(5);
  FieldPoly g(f, {1, 2, 1});  // (t+1)^2
  CHECK(g.eval(f->element(4)).code() == 0);  // 4 = -1 is the double root
  CHECK(g.eval(f->element(1)).code() == 4);

  // g(c*t) evaluated at x equals g evaluated at c*x, for every c and x.
  for (std::uint32_t c = 0; c < 5; ++c) {
    FieldPoly gc = g.compose_scaled_arg(f->element(c));
    for (std::uint32_t x = 0; x < 5; ++x) {
      CHECK(gc.eval(f->element(x)) == g.eval(f->element(c) * f->element(x)));
    }
  }
  // Coefficient view: coefficient of t^i picks up c^i.
  FieldPoly g2 = g.compose_scaled_arg(f->element(2));
  CHECK(g2.coeff(0) == 1);
  CHECK(g2.coeff(1) == f->mul(2, 2));
  CHECK(g2.coeff(2) == f->mul(1, 4));
}

TEST_CASE("twist invariance characterization") {
  auto f3 = Field::make(3);
  FieldPoly t2p1(f3, {1, 0, 1});   // t^2 + 1
  FieldPoly t3pt(f3, {0, 1, 0, 1}); // t^3 + t
  FieldPoly t3(f3, {0, 0, 0, 1});  // t^3
  FieldPoly t2pt(f3, {0, 1, 1});   // t^2 + t

  // m = 1 fixes everything.
  CHECK(is_twist_invariant(t2pt, 1));
  // Pure powers of t are invariant for every order.
  for (unsigned m = 1; m <= 6; ++m) CHECK(is_twist_invariant(t3, m));
  // t^2 + 1: exponent gap 2 - 0 is divisible by 2, not by 3.
  CHECK(is_twist_invariant(t2p1, 2));
  CHECK_FALSE(is_twist_invariant(t2p1, 3));
  // t^3 + t: gap 3 - 1 = 2.
  CHECK(is_twist_invariant(t3pt, 2));
  CHECK_FALSE(is_twist_invariant(t3pt, 3));
  // t^2 + t: gap 1.
  CHECK_FALSE(is_twist_invariant(t2pt, 2));

  // Semantic route: g is twist invariant for m = ord(zeta) iff
  // g(zeta * t) = zeta^deg * g(t).
  auto f5 = Field::make(5);
  auto zeta = f5->element(2);  // order 4
  for (std::uint32_t c0 = 0; c0 < 5; ++c0)
    for (std::uint32_t c1 = 0; c1 < 5; ++c1)
      for (std::uint32_t c2 = 0; c2 < 5; ++c2) {
        FieldPoly g(f5, {c0, c1, c2, 1});  // monic cubic
        FieldPoly lhs = g.compose_scaled_arg(zeta);
        FieldPoly rhs = g.scaled(zeta.pow(3).code());
        CHECK(is_twist_invariant(g, 4) == (lhs == rhs));
      }
}

TEST_CASE("monic_polys_of_degree enumerates q^d polynomials in code order") {
  auto f = Field::make(3);
  auto quad = monic_polys_of_degree(f, 2);
  REQUIRE(quad.size() == 9);
  for (const auto& g : quad) {
    CHECK(g.is_monic());
    CHECK(g.degree() == 2);
  }
  // Constant term varies fastest.
  CHECK(quad[0].coeffs() == std::vector<std::uint32_t>{0, 0, 1});
  CHECK(quad[1].coeffs() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(quad[3].coeffs() == std::vector<std::uint32_t>{0, 1, 1});
  CHECK(monic_polys_of_degree(f, 0).size() == 1);
  CHECK(monic_polys_of_degree(Field::make(2, 2), 3).size() == 64);
}

TEST_CASE("to_string canonical forms") {
  auto f3 = Field::make(3);
  CHECK(FieldPoly(f3, {1, 2, 1}).to_string() == "t^2 + 2*t + 1");
  CHECK(FieldPoly(f3, {0, 2}).to_string() == "2*t");
  CHECK(FieldPoly(f3).to_string() == "0");
  CHECK(FieldPoly::one(f3).to_string() == "1");
  // Extension-field coefficients are parenthesized when non-prime.
  auto f4 = Field::make(2, 2);
  CHECK(FieldPoly(f4, {2, 3, 1}).to_string() == "t^2 + (1 + t)*t + t");
}

TEST_CASE("mixed-field polynomial arithmetic throws") {
  FieldPoly a(Field::make(3), {1, 1});
  FieldPoly b(Field::make(5), {1, 1});
  CHECK_THROWS_AS((a + b), std::invalid_argument);
  CHECK_THROWS_AS((a * b), std::invalid_argument);
}

}  // TEST_SUITE("fieldpoly")
