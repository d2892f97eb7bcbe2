#include "twyst/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace twyst;

TEST_CASE("rationals are canonical") {
  Rational q = rat(6, -4);
  CHECK(q == rat(-3, 2));
  CHECK(rat_to_string(q) == "-3/2");
  CHECK(rat(0, 7) == Rational(0));
  CHECK(rat_to_string(rat(0, 7)) == "0/1");
  CHECK_THROWS(rat(1, 0));
}

TEST_CASE("string round trip") {
  Rational q = rat(-22, 7);
  CHECK(rat_to_string(q) == "-22/7");
  CHECK(rat_from_string("-22/7") == q);
  CHECK(rat_from_string("5") == Rational(5));
  CHECK(rat_from_string(rat_to_string(rat(10, 4))) == rat(5, 2));
}

TEST_CASE("binomials and powers") {
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(0, 0) == Rational(1));
  CHECK(binomial(3, 5) == Rational(0));
  CHECK(binomial(-1, 0) == Rational(0));  // callers special-case the m = 0 weight
  CHECK(rat_pow(rat(3, 2), 3) == rat(27, 8));
  CHECK(rat_pow(rat(2), -2) == rat(1, 4));
  CHECK(rat_pow(rat(-1, 2), 2) == rat(1, 4));
}

TEST_CASE("big arithmetic stays exact") {
  Rational q(1);
  for (int k = 1; k <= 40; ++k) q *= rat(k, k + 1);
  CHECK(q == rat(1, 41));

  // overflow promotes to the big representation and stays exact
  Rational big = rat_pow(rat(10), 12);  // 10^12 fits
  CHECK(big.is_small());
  Rational huge = rat_pow(rat(10), 30);
  CHECK_FALSE(huge.is_small());
  CHECK(rat_to_string(huge) == "1000000000000000000000000000000/1");
  CHECK(huge / rat_pow(rat(10), 25) == rat(100000));
  CHECK((huge - huge).sign() == 0);
  CHECK(rat_from_string("1000000000000000000000000000000/3") * rat(3) == huge);
  // narrowing back after cancellation
  Rational back = huge;
  back /= rat_pow(rat(10), 28);
  CHECK(back == rat(100));
  CHECK(back.is_small());
}
