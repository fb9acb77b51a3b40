#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qcommute/field.hpp"

using namespace qcommute;

TEST_SUITE("field") {

TEST_CASE("construction accepts prime powers and rejects everything else") {
  CHECK(Field::make(2)->size() == 2);
  CHECK(Field::make(3)->size() == 3);
  CHECK(Field::make(2, 2)->size() == 4);
  CHECK(Field::make(2, 3)->size() == 8);
  CHECK(Field::make(3, 2)->size() == 9);
  CHECK(Field::make(2, 10)->size() == 1024);

  CHECK_THROWS_AS((Field::make(0)), std::invalid_argument);
  CHECK_THROWS_AS((Field::make(1)), std::invalid_argument);
  CHECK_THROWS_AS((Field::make(4)), std::invalid_argument);    // not prime
  CHECK_THROWS_AS((Field::make(6)), std::invalid_argument);    // not prime
  CHECK_THROWS_AS((Field::make(2, 0)), std::invalid_argument);  // k >= 1
  CHECK_THROWS_AS((Field::make(2, 25)), std::invalid_argument); // 2^25 > max size
}

TEST_CASE("characteristic, degree, size are consistent") {
  auto f = Field::make(3, 2);
  CHECK(f->characteristic() == 3);
  CHECK(f->degree() == 2);
  CHECK(f->size() == 9);
}

TEST_CASE("modulus is the lexicographically smallest monic irreducible") {
  // Constant term first, leading 1 last.
  CHECK(Field::make(5)->modulus() == std::vector<std::uint32_t>{0, 1});      // t
  CHECK(Field::make(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});    // t^2+t+1
  CHECK(Field::make(2, 3)->modulus() == std::vector<std::uint32_t>{1, 0, 1, 1}); // t^3+t^2+1
  CHECK(Field::make(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});    // t^2+1
  // Over GF(5): t^2+1 = (t-2)(t+2) splits, so the next candidate t^2+t+1
  // (discriminant -3 = 2, a non-square mod 5) is the chosen modulus.
  CHECK(Field::make(5, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("GF(4) multiplication table facts") {
  auto f = Field::make(2, 2);
  // code 2 = t, code 3 = 1 + t, and t^2 = t + 1 under t^2+t+1.
  CHECK(f->mul(2, 2) == 3);
  CHECK(f->mul(2, 3) == 1);  // t * (1+t) = t + t^2 = 1
  CHECK(f->add(2, 3) == 1);
  CHECK(f->inv(2) == 3);
}

TEST_CASE("prime field arithmetic matches integers mod p") {
  auto f = Field::make(7);
  for (std::uint32_t a = 0; a < 7; ++a) {
    for (std::uint32_t b = 0; b < 7; ++b) {
      CHECK(f->add(a, b) == (a + b) % 7);
      CHECK(f->mul(a, b) == (a * b) % 7);
      CHECK(f->sub(a, b) == (a + 7 - b) % 7);
    }
    CHECK(f->neg(a) == (7 - a) % 7);
  }
  CHECK(f->inv(3) == 5);  // 3*5 = 15 = 1 mod 7
}

TEST_CASE("field axioms hold exhaustively in GF(9)") {
  auto f = Field::make(3, 2);
  const std::uint32_t q = 9;
  for (std::uint32_t a = 0; a < q; ++a) {
    CHECK(f->add(a, 0) == a);
    CHECK(f->mul(a, 1) == a);
    CHECK(f->add(a, f->neg(a)) == 0);
    if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
    for (std::uint32_t b = 0; b < q; ++b) {
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      CHECK(f->sub(a, b) == f->add(a, f->neg(b)));
      for (std::uint32_t c = 0; c < q; ++c) {
        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
      }
    }
  }
  // Characteristic 3: 1 + 1 + 1 = 0.
  CHECK(f->add(1, f->add(1, 1)) == 0);
}

TEST_CASE("inv throws on zero") {
  CHECK_THROWS_AS((Field::make(5)->inv(0)), std::invalid_argument);
  CHECK_THROWS_AS((Field::make(2, 2)->inv(0)), std::invalid_argument);
}

TEST_CASE("pow matches repeated multiplication and Fermat") {
  auto f = Field::make(2, 3);  // GF(8)
  for (std::uint32_t a = 0; a < 8; ++a) {
    std::uint32_t acc = 1;
    for (unsigned e = 0; e < 10; ++e) {
      if (e > 0 || a != 0) CHECK(f->pow(a, e) == acc);
      acc = f->mul(acc, a);
    }
    CHECK(f->pow(a, 8) == a);  // a^q = a
  }
  CHECK(Field::make(5)->pow(0, 3) == 0);
}

TEST_CASE("large fields without dense tables stay consistent") {
  auto f = Field::make(257);  // prime above the table cap
  for (std::uint32_t a : {1u, 2u, 100u, 256u}) {
    CHECK(f->mul(a, f->inv(a)) == 1);
    CHECK(f->mul(a, 256) == f->sub(0, a));  // 256 = -1
  }
  auto g = Field::make(2, 10);  // GF(1024)
  for (std::uint32_t a : {1u, 2u, 3u, 512u, 1023u}) {
    CHECK(g->mul(a, g->inv(a)) == 1);
    CHECK(g->pow(a, 1024) == a);
    CHECK(g->pow(a, 1023) == 1);
  }
}

TEST_CASE("code and coefficient views agree") {
  auto f = Field::make(3, 2);
  for (std::uint32_t code = 0; code < 9; ++code) {
    auto c = f->code_to_coeffs(code);
    REQUIRE(c.size() == 2);
    CHECK(c[0] + 3 * c[1] == code);
    CHECK(f->coeffs_to_code(c) == code);
    CHECK(f->element(code).coeffs() == c);
  }
  CHECK(f->from_coeffs({2, 1}).code() == 5);
}

TEST_CASE("elements compare across instances of the same field") {
  auto a = Field::make(3, 2);
  auto b = Field::make(3, 2);
  CHECK(same_field(*a, *b));
  CHECK(a->element(5) == b->element(5));
  CHECK_FALSE(a->element(5) == b->element(4));
  // Same modulus chosen for both instances.
  CHECK(a->modulus() == b->modulus());
  // Arithmetic across instances works because (p, k) match.
  CHECK((a->element(5) + b->element(4)).code() == a->add(5, 4));
}

TEST_CASE("mixed-field arithmetic throws") {
  auto f4 = Field::make(2, 2);
  auto f9 = Field::make(3, 2);
  CHECK_FALSE(same_field(*f4, *f9));
  CHECK_THROWS_AS((f4->element(2) + f9->element(2)), std::invalid_argument);
  CHECK_THROWS_AS((f4->element(2) * f9->element(2)), std::invalid_argument);
}

TEST_CASE("element operators mirror code arithmetic") {
  auto f = Field::make(5);
  FieldElement a = f->element(3), b = f->element(4);
  CHECK((a + b).code() == 2);
  CHECK((a - b).code() == 4);
  CHECK((a * b).code() == 2);
  CHECK((a / b).code() == f->mul(3, f->inv(4)));
  CHECK((-a).code() == 2);
  CHECK(a.inverse().code() == 2);  // 3*2 = 6 = 1
  CHECK(a.pow(2).code() == 4);
  CHECK(f->zero().is_zero());
  CHECK(f->one().is_one());
}

TEST_CASE("multiplicative orders") {
  auto f5 = Field::make(5);
  CHECK(multiplicative_order(f5->element(1)) == 1);
  CHECK(multiplicative_order(f5->element(2)) == 4);
  CHECK(multiplicative_order(f5->element(3)) == 4);
  CHECK(multiplicative_order(f5->element(4)) == 2);
  CHECK_THROWS_AS((multiplicative_order(f5->element(0))), std::invalid_argument);

  auto f9 = Field::make(3, 2);
  CHECK(multiplicative_order(f9->element(3)) == 4);  // t: t^2 = -1
  CHECK(multiplicative_order(f9->element(4)) == 8);  // 1+t generates GF(9)*
}

TEST_CASE("elements_of_order enumerates sorted and respects divisibility") {
  auto f7 = Field::make(7);
  auto ord3 = elements_of_order(f7, 3);
  REQUIRE(ord3.size() == 2);
  CHECK(ord3[0].code() == 2);
  CHECK(ord3[1].code() == 4);
  auto ord6 = elements_of_order(f7, 6);
  REQUIRE(ord6.size() == 2);
  CHECK(ord6[0].code() == 3);
  CHECK(ord6[1].code() == 5);

  // m must divide q - 1; otherwise there is nothing.
  CHECK(elements_of_order(f7, 4).empty());
  CHECK(elements_of_order(Field::make(2, 2), 2).empty());
  CHECK(element_of_order(Field::make(2, 2), 2) == std::nullopt);

  // phi(8) = 4 generators of GF(9)*.
  CHECK(elements_of_order(Field::make(3, 2), 8).size() == 4);

  auto first = element_of_order(f7, 3);
  REQUIRE(first.has_value());
  CHECK(first->code() == 2);
  CHECK(element_of_order(Field::make(2), 1)->code() == 1);
}

TEST_CASE("to_string and parse_element round-trip") {
  auto f9 = Field::make(3, 2);
  CHECK(to_string(f9->element(0)) == "0");
  CHECK(to_string(f9->element(1)) == "1");
  CHECK(to_string(f9->element(3)) == "t");
  CHECK(to_string(f9->element(5)) == "2 + t");
  CHECK(to_string(f9->element(6)) == "2*t");

  for (std::uint32_t code = 0; code < 9; ++code) {
    CHECK(parse_element(f9, to_string(f9->element(code))).code() == code);
  }
  auto f5 = Field::make(5);
  for (std::uint32_t code = 0; code < 5; ++code) {
    CHECK(parse_element(f5, to_string(f5->element(code))).code() == code);
  }

  CHECK(parse_element(f9, "2 + t").code() == 5);
  CHECK(parse_element(f9, "t+2").code() == 5);     // order-free
  CHECK(parse_element(f9, "  t  ").code() == 3);   // whitespace optional
  CHECK(parse_element(f5, "7").code() == 2);       // coefficients reduced mod p

  CHECK_THROWS_AS((parse_element(f9, "x")), std::invalid_argument);
  CHECK_THROWS_AS((parse_element(f9, "")), std::invalid_argument);
  CHECK_THROWS_AS((parse_element(f9, "t^5")), std::invalid_argument);
}

}  // TEST_SUITE("field")
