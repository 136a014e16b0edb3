#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tightcl/polyfield.hpp"

using namespace tc;
using tc::testing::P;
using tc::testing::random_poly;
using tc::testing::ring_xyz;

TEST_CASE("field arithmetic examples") {
  auto r5 = ring_xyz(5, 2);
  CHECK((P(r5, "x+y") * P(r5, "x-y")).to_string() == "x^2 + 4*y^2");

  auto r2 = ring_xyz(2, 2);
  CHECK(P(r2, "x+y").pow(2) == P(r2, "x^2+y^2"));

  auto f = P(r5, "3*x^2*y + y - 1");
  CHECK((Polynomial::constant(r5, 0) * f).is_zero());
  CHECK(poly_arith(f, f, ArithOp::Sub).is_zero());
}

TEST_CASE("prime scalar obeys Fermat") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u})
    for (Coeff a = 0; a < std::min<std::uint32_t>(p, 20); ++a)
      CHECK(PrimeScalar{a, p}.pow(p) == PrimeScalar{a, p});
}

TEST_CASE("non-prime characteristic is rejected") {
  CHECK_THROWS_AS(PolyRing::make(6, {"x"}), Error);
  CHECK_THROWS_AS(PolyRing::make(1, {"x"}), Error);
}

TEST_CASE("frobenius examples") {
  auto r3 = ring_xyz(3);
  CHECK(frobenius_power(P(r3, "x+y"), 1) == P(r3, "x^3+y^3"));
  auto r2 = ring_xyz(2);
  CHECK(frobenius_power(P(r2, "x^2*y"), 2) == P(r2, "x^8*y^4"));
  auto r5 = ring_xyz(5);
  CHECK(frobenius_power(P(r5, "2*x + z^2"), 1) == P(r5, "2*x^5 + z^10"));
  CHECK(frobenius_power(P(r5, "2*x + z^2"), 0) == P(r5, "2*x + z^2"));
}

TEST_CASE("frobenius exponent overflow is a hard error") {
  auto r2 = ring_xyz(2);
  CHECK_THROWS_AS(frobenius_power(P(r2, "x^1000"), 25), Error);
  CHECK_THROWS_AS(frobenius_power(P(r2, "x"), 40), Error);
}

TEST_CASE("monomial order examples") {
  auto lex = ring_xyz(5, 2, OrderKind::Lex);
  CHECK(lex->greater(lex->monomial(std::vector{1, 0}), lex->monomial(std::vector{0, 2})));

  auto drl = ring_xyz(5, 2);
  CHECK(drl->greater(drl->monomial(std::vector{2, 1}), drl->monomial(std::vector{1, 2})));

  auto drl3 = ring_xyz(5, 3);
  CHECK(drl3->greater(drl3->monomial(std::vector{0, 2, 0}), drl3->monomial(std::vector{1, 0, 1})));
}

TEST_CASE("ring arithmetic is associative and distributive") {
  std::mt19937 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = ring_xyz(p);
    for (int k = 0; k < 70; ++k) {
      auto a = random_poly(rng, r, 5, 4);
      auto b = random_poly(rng, r, 5, 4);
      auto c = random_poly(rng, r, 5, 4);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a * b == b * a);
    }
  }
}

TEST_CASE("frobenius is a ring endomorphism") {
  std::mt19937 rng(23);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = ring_xyz(p);
    for (int k = 0; k < 100; ++k) {
      auto f = random_poly(rng, r, 4, 3);
      auto g = random_poly(rng, r, 4, 3);
      REQUIRE(frobenius_power(f + g, 1) == frobenius_power(f, 1) + frobenius_power(g, 1));
      REQUIRE(frobenius_power(f * g, 1) == frobenius_power(f, 1) * frobenius_power(g, 1));
      REQUIRE(frobenius_power(f, 1) == f.pow(p));
    }
    for (int k = 0; k < 20; ++k) {
      auto f = random_poly(rng, r, 4, 3);
      for (int e1 = 0; e1 <= 2; ++e1)
        for (int e2 = 0; e2 <= 2; ++e2)
          REQUIRE(frobenius_power(f, e1 + e2) == frobenius_power(frobenius_power(f, e1), e2));
    }
  }
}

TEST_CASE("monomial orders are total and multiplicative") {
  std::mt19937 rng(5);
  for (auto kind : {OrderKind::Lex, OrderKind::DegRevLex}) {
    auto r = PolyRing::make(7, {"a", "b", "c", "d"}, {1, 2, 1, 3}, MonomialOrder{kind, 0});
    for (int k = 0; k < 300; ++k) {
      auto m1 = tc::testing::random_monomial(rng, *r, 6);
      auto m2 = tc::testing::random_monomial(rng, *r, 6);
      auto m = tc::testing::random_monomial(rng, *r, 6);
      auto c12 = r->compare(m1, m2);
      REQUIRE(r->compare(m2, m1) == 0 <=> c12);
      REQUIRE((c12 == 0) == (m1 == m2));
      REQUIRE(r->compare(m1 * m, m2 * m) == c12);
      REQUIRE(!r->greater(r->one(), m1));
    }
  }
}

TEST_CASE("text grammar") {
  auto r = ring_xyz(5);
  CHECK(P(r, "x^3 + y^3 + z^3").to_string() == "x^3 + y^3 + z^3");
  CHECK(P(r, "2*x*y^2 - z") == P(r, "2 x y^2 + 4 z"));
  CHECK(P(r, "-3") == Polynomial::constant(r, 2));
  CHECK(P(r, "x^1*y") == P(r, "x y"));
  CHECK(P(r, "12*x") == P(r, "2*x"));
  CHECK(P(r, "(x+y)^5") == P(r, "x^5 + y^5"));

  CHECK_THROWS_AS(P(r, "x + w"), ParseError);
  CHECK_THROWS_AS(P(r, "x +"), ParseError);
  CHECK_THROWS_AS(P(r, ""), ParseError);
  try {
    P(r, "x + 2*q");
  } catch (const ParseError& e) {
    CHECK(e.column() == 7);
  }
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937 rng(99);
  for (std::uint32_t p : {2u, 3u, 5u, 13u}) {
    auto r = ring_xyz(p);
    for (int k = 0; k < 50; ++k) {
      auto f = random_poly(rng, r, 6, 5);
      REQUIRE(parse_polynomial(f.to_string(), r) == f);
    }
  }
}

TEST_CASE("exact division and variable mapping") {
  auto r = ring_xyz(5);
  auto a = P(r, "x^2 - y^2");
  CHECK(divide_exact(a, P(r, "x+y")) == P(r, "x-y"));
  CHECK_THROWS_AS(divide_exact(P(r, "x^2+1"), P(r, "x+y")), Error);

  auto r2 = PolyRing::make(5, {"t", "x", "y", "z"});
  std::vector<std::size_t> up{1, 2, 3};
  auto lifted = map_variables(P(r, "x*z^2 + y"), r2, up);
  CHECK(lifted == parse_polynomial("x*z^2 + y", r2));
}

TEST_CASE("mismatched rings are rejected") {
  auto r5 = ring_xyz(5);
  auto r3 = ring_xyz(3);
  CHECK_THROWS_AS(poly_arith(P(r5, "x"), P(r3, "x"), ArithOp::Add), Error);
  auto r5xy = ring_xyz(5, 2);
  CHECK_THROWS_AS(poly_arith(P(r5, "x"), P(r5xy, "x"), ArithOp::Mul), Error);
}
