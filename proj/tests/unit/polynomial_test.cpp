#include "frobtool/errors.hpp"
#include "frobtool/parser.hpp"
#include "frobtool/polynomial.hpp"

#include "../support/generators.hpp"

#include <gtest/gtest.h>

using namespace frob;

TEST(Polynomial, RingAxiomsOnRandomInputs) {
  prop::Gen g(21);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    auto ring = g.ring(p, 3);
    for (int i = 0; i < 60; ++i) {
      auto a = g.poly(ring, 4, 3), b = g.poly(ring, 4, 3), c = g.poly(ring, 3, 2);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a - a).is_zero());
      EXPECT_EQ(-(-a), a);
      EXPECT_EQ(a.scaled(p - 1), -a);
    }
  }
}

TEST(Polynomial, FrobeniusIsTheQthPower) {
  prop::Gen g(22);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto ring = g.ring(p, 3);
    for (int i = 0; i < 30; ++i) {
      auto f = g.poly(ring, 4, 2), h = g.poly(ring, 3, 2);
      for (unsigned e = 0; e <= 2; ++e) {
        EXPECT_EQ(frobenius_pow(f, e), f.pow(prime_power(p, e)));
        EXPECT_EQ(frobenius_pow(f + h, e), frobenius_pow(f, e) + frobenius_pow(h, e));
      }
    }
  }
}

TEST(Polynomial, ExactDivision) {
  prop::Gen g(23);
  auto ring = g.ring(5, 3);
  for (int i = 0; i < 40; ++i) {
    auto f = g.nonzero_poly(ring, 3, 2), h = g.poly(ring, 4, 2);
    auto q = divide_exact(f * h, f);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, h);
  }
  auto x = Polynomial::variable(ring, "x"), y = Polynomial::variable(ring, "y");
  EXPECT_FALSE(divide_exact(x + y, x).has_value());
}

TEST(Polynomial, PrintsCanonically) {
  auto ring = RingSpec::make(PrimeField(5), {"x", "y", "z"});
  EXPECT_EQ(to_string(parse_polynomial("3*x*y^2 - z + 7", ring)), "3*x*y^2 + 4*z + 2");
  EXPECT_EQ(to_string(parse_polynomial("z^2 + x^2 + y*z", ring)), "x^2 + y*z + z^2");
  EXPECT_EQ(to_string(parse_polynomial("x - x", ring)), "0");
  EXPECT_EQ(to_string(parse_polynomial("(x+y)^5", ring)), "x^5 + y^5");
  EXPECT_EQ(to_string(parse_polynomial("123456789012345678901234567890", ring)), "0");
}

TEST(Polynomial, ParsePrintRoundTrip) {
  prop::Gen g(24);
  for (std::uint32_t p : {2u, 3u, 11u}) {
    auto ring = g.ring(p, 4);
    for (int i = 0; i < 80; ++i) {
      auto f = g.poly(ring, 5, 4);
      EXPECT_EQ(parse_polynomial(to_string(f), ring), f);
    }
  }
}

TEST(Parser, ReportsLocations) {
  auto ring = RingSpec::make(PrimeField(2), {"x", "y"});
  auto fails_at = [&](const char* src, std::size_t col, const char* needle) {
    try {
      parse_polynomial(src, ring);
      ADD_FAILURE() << "parsed " << src;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), 1u) << src;
      EXPECT_EQ(e.column(), col) << src;
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
    }
  };
  fails_at("x + q", 5, "unknown variable 'q'");
  fails_at("x + ", 5, "");
  fails_at("(x", 3, "");
  fails_at("x $ y", 3, "unexpected character");
  EXPECT_THROW(parse_polynomial("x**2", ring), ParseError);
}

TEST(Polynomial, GradingQueries) {
  auto ring = RingSpec::make(PrimeField(3), {"a", "b"}, {2, 3});
  auto f = parse_polynomial("a^3 + b^2", ring);
  EXPECT_TRUE(f.is_homogeneous());
  EXPECT_EQ(f.weighted_degree(), 6);
  EXPECT_FALSE(parse_polynomial("a + b", ring).is_homogeneous());
  EXPECT_THROW(Polynomial::variable(ring, "a") + Polynomial::variable(RingSpec::make(PrimeField(5), {"a"}), "a"),
               RingMismatch);
}
