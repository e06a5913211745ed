#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "pcp/errors.hpp"
#include "pcp/rational.hpp"

using pcp::format_rational;
using pcp::parse_weight;
using pcp::Rational;

TEST_CASE("parse_weight accepts integers, decimals, and fractions") {
  CHECK(parse_weight("5") == Rational(5));
  CHECK(parse_weight("0") == Rational(0));
  CHECK(parse_weight("007") == Rational(7));
  CHECK(parse_weight("0.5") == Rational(1, 2));
  CHECK(parse_weight("2.50") == Rational(5, 2));
  CHECK(parse_weight("3.125") == Rational(25, 8));
  CHECK(parse_weight("1/3") == Rational(1, 3));
  CHECK(parse_weight("6/4") == Rational(3, 2));
  CHECK(parse_weight("0/9") == Rational(0));
  CHECK(parse_weight("123456789123456789") == Rational(pcp::BigInt("123456789123456789")));
  // Leading zeros are plain decimal digits, never an octal prefix.
  CHECK(parse_weight("017") == Rational(17));
  CHECK(parse_weight("4.0625") == Rational(65, 16));
  CHECK(parse_weight("08/010") == Rational(4, 5));
}

TEST_CASE("parse_weight rejects malformed input") {
  for (const char* bad : {"", "-1", "1.2.3", "1/0", "a", "1 2", ".5", "5.", "/3", "3/", "1e3",
                          "+4", "1.-2", "2/-3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_weight(bad), pcp::InputError);
  }
}

TEST_CASE("format_rational prints terminating decimals and p/q otherwise") {
  CHECK(format_rational(Rational(5)) == "5");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(Rational(1, 2)) == "0.5");
  CHECK(format_rational(Rational(5, 2)) == "2.5");
  CHECK(format_rational(Rational(3, 8)) == "0.375");
  CHECK(format_rational(Rational(7, 50)) == "0.14");
  CHECK(format_rational(Rational(1, 10)) == "0.1");
  CHECK(format_rational(Rational(1000000, 8)) == "125000");
  CHECK(format_rational(Rational(1, 3)) == "1/3");
  CHECK(format_rational(Rational(1, 7)) == "1/7");
  CHECK(format_rational(Rational(22, 7)) == "22/7");
  CHECK(format_rational(Rational(1, 6)) == "1/6");
}

TEST_CASE("format then parse round-trips") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> num(0, 999), den(1, 999);
  for (int k = 0; k < 500; ++k) {
    Rational r(num(rng), den(rng));
    CAPTURE(format_rational(r));
    CHECK(parse_weight(format_rational(r)) == r);
  }
}

TEST_CASE("rational arithmetic is exact") {
  Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
}
