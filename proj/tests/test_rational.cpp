#include "doctest.h"
#include "fukaya/rational.hpp"

using namespace fukaya;

TEST_CASE("rational arithmetic normalizes eagerly") {
  Rat a(2, 6);
  CHECK(a == Rat(1, 3));
  CHECK((Rat(1, 2) + Rat(1, 3)) == Rat(5, 6));
  CHECK((Rat(1, 2) - Rat(1, 3)) == Rat(1, 6));
  CHECK((Rat(2, 3) * Rat(9, 4)) == Rat(3, 2));
  CHECK((Rat(2, 3) / Rat(4, 9)) == Rat(3, 2));
  CHECK(Rat(3, -4) == Rat(-3, 4));
  CHECK((-Rat(3, 4)).sign() == -1);
  CHECK(Rat(0, 17) == Rat(0));
  CHECK(Rat(0).is_zero());
  CHECK(Rat(7, 1).is_integer());
  CHECK_FALSE(Rat(7, 2).is_integer());
  CHECK(Rat(5, 6) > Rat(3, 4));
  CHECK(Rat(-5, 6) < Rat(-3, 4));
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("rational parsing handles integers, fractions, decimals") {
  CHECK(Rat::parse("3") == Rat(3));
  CHECK(Rat::parse("-3/4") == Rat(-3, 4));
  CHECK(Rat::parse("+2/6") == Rat(1, 3));
  CHECK(Rat::parse("0.125") == Rat(1, 8));
  CHECK(Rat::parse("-0.5") == Rat(-1, 2));
  CHECK(Rat::parse("2.") == Rat(2));
  CHECK(Rat::parse(".25") == Rat(1, 4));
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1.5e3"), std::invalid_argument);
}

TEST_CASE("from_double is exact on dyadics and round-trips") {
  CHECK(Rat::from_double(0.5) == Rat(1, 2));
  CHECK(Rat::from_double(-0.375) == Rat(-3, 8));
  CHECK(Rat::from_double(3.0) == Rat(3));
  CHECK(Rat::from_double(0.0) == Rat(0));
  double x = 0.1;  // not dyadic: conversion captures the rounded bit pattern
  CHECK(Rat::from_double(x).to_double() == x);
  CHECK_THROWS_AS(Rat::from_double(1.0 / 0.0), std::invalid_argument);
}

TEST_CASE("floor and frac use the floor convention") {
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-3).floor() == -3);
  CHECK(Rat(7, 2).frac() == Rat(1, 2));
  CHECK(Rat(-7, 2).frac() == Rat(1, 2));
  CHECK(Rat(-1, 3).frac() == Rat(2, 3));
  CHECK(Rat(4).frac() == Rat(0));
}

TEST_CASE("overflow is detected, not wrapped") {
  Rat big(static_cast<int128>(1) << 100, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK_THROWS_AS(big * big + Rat(1), std::overflow_error);
}

TEST_CASE("vec2 algebra and lattice predicates") {
  Vec2 u{Rat(1, 2), Rat(3)};
  Vec2 v{Rat(1, 2), Rat(-1)};
  CHECK((u + v) == Vec2{Rat(1), Rat(2)});
  CHECK((u - v) == Vec2{Rat(0), Rat(4)});
  CHECK((Rat(2) * u) == Vec2{Rat(1), Rat(6)});
  CHECK(cross(u, v) == Rat(-1, 2) - Rat(3, 2));
  CHECK(dot(u, v) == Rat(1, 4) - Rat(3));
  CHECK(Vec2{Rat(2), Rat(-5)}.is_lattice());
  CHECK_FALSE(u.is_lattice());
  CHECK(Vec2{Rat(-1, 3), Rat(7, 2)}.mod1() == Vec2{Rat(2, 3), Rat(1, 2)});
}

TEST_CASE("extended gcd returns a valid Bezout pair") {
  for (long long a = -12; a <= 12; ++a)
    for (long long b = -12; b <= 12; ++b) {
      if (a == 0 && b == 0) continue;
      ExtGcd e = ext_gcd(a, b);
      CHECK(e.g > 0);
      CHECK(a % e.g == 0);
      CHECK(b % e.g == 0);
      CHECK(e.u * a + e.v * b == e.g);
    }
}

TEST_CASE("floor-convention modulo") {
  CHECK(mod_floor(7, 3) == 1);
  CHECK(mod_floor(-7, 3) == 2);
  CHECK(mod_floor(-3, 3) == 0);
  CHECK(mod_floor(0, 5) == 0);
}
