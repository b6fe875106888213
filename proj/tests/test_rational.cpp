#include "doctest.h"
#include "hap/errors.hpp"
#include "hap/rational.hpp"

using namespace hap;

TEST_CASE("rational parse and format round trip") {
  CHECK(format_rational(parse_rational("3")) == "3");
  CHECK(format_rational(parse_rational("-1/2")) == "-1/2");
  CHECK(format_rational(parse_rational("2/4")) == "1/2");
  CHECK(format_rational(parse_rational("0.25")) == "1/4");
  CHECK(format_rational(parse_rational("-0.5")) == "-1/2");
  CHECK(format_rational(parse_rational(" 7/3 ")) == "7/3");
  CHECK(parse_rational("0") == 0);
}

TEST_CASE("rational parse rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("a/b"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.2.3"), Error);
}
