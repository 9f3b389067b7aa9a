#include <catch2/catch_amalgamated.hpp>

#include "sqvis/rational.hpp"

using namespace sqvis;

TEST_CASE("rationals are kept canonical") {
  const Rational half(2, 4);
  CHECK(numerator(half) == 1);
  CHECK(denominator(half) == 2);

  const Rational neg(-6, 4);
  CHECK(numerator(neg) == -3);
  CHECK(denominator(neg) == 2);

  const Rational sum = Rational(1, 6) + Rational(1, 3);
  CHECK(numerator(sum) == 1);
  CHECK(denominator(sum) == 2);

  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("format_rational") {
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK(format_rational(Rational(1, 2)) == "1/2");
  CHECK(format_rational(Rational(-3, 2)) == "-3/2");
  CHECK(format_rational(Rational(-31, 32)) == "-31/32");
}

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(*parse_rational("0") == Rational(0));
  CHECK(*parse_rational("-7") == Rational(-7));
  CHECK(*parse_rational("+3") == Rational(3));
  CHECK(*parse_rational("1/2") == Rational(1, 2));
  CHECK(*parse_rational("-3/4") == Rational(-3, 4));
  CHECK(*parse_rational("006/008") == Rational(3, 4));
  CHECK(*parse_rational("0.25") == Rational(1, 4));
  CHECK(*parse_rational("-0.5") == Rational(-1, 2));
  CHECK(*parse_rational("3.50") == Rational(7, 2));
  CHECK(*parse_rational("12345678901234567890") ==
        Rational(Integer("12345678901234567890")));
}

TEST_CASE("parse_rational rejects malformed input") {
  for (const char* bad : {"", "-", ".", ".5", "1.", "1/", "/2", "1/0", "1/-2",
                          "1.2.3", "1 /2", "abc", "0x10", "1e3", "2/3/4"}) {
    CAPTURE(bad);
    CHECK(!parse_rational(bad).has_value());
  }
}

TEST_CASE("parse and format round-trip") {
  for (const char* text : {"0", "-7", "1/2", "-31/32", "35/32", "100"}) {
    CHECK(format_rational(*parse_rational(text)) == text);
  }
  // decimals re-serialize in canonical fraction form
  CHECK(format_rational(*parse_rational("0.25")) == "1/4");
  CHECK(format_rational(*parse_rational("2.0")) == "2");
}

TEST_CASE("parse_rational keeps decimal place value with leading zeros") {
  CHECK(*parse_rational("0.05") == Rational(1, 20));
  CHECK(*parse_rational("-0.003") == Rational(-3, 1000));
  CHECK(*parse_rational("00.50") == Rational(1, 2));
  CHECK(*parse_rational("0") == Rational(0));
  CHECK(*parse_rational("0/7") == Rational(0));
}
