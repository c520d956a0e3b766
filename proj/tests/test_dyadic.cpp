#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hhc/dyadic.hpp"

using namespace hhc;

TEST_CASE("canonical form", "[dyadic]") {
  CHECK(DyadicScalar(4, 3) == DyadicScalar(1, 1));
  CHECK(DyadicScalar(0, 7) == DyadicScalar());
  CHECK(DyadicScalar(0, 7).exp == 0);
  CHECK(DyadicScalar(6, 1) == DyadicScalar(3, 0));
  CHECK(DyadicScalar(-8, 3) == DyadicScalar(-1, 0));
  CHECK(DyadicScalar(5, 4).num == 5);
}

TEST_CASE("arithmetic is exact and closed", "[dyadic]") {
  const DyadicScalar half(1, 1), quarter(1, 2);
  CHECK(half + quarter == DyadicScalar(3, 2));
  CHECK(half - quarter == quarter);
  CHECK(half * half == quarter);
  CHECK(-half == DyadicScalar(-1, 1));
  CHECK(half.half() == quarter);
  CHECK(DyadicScalar().half() == DyadicScalar());

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const DyadicScalar a(static_cast<std::int64_t>(rng() % 2000) - 1000, static_cast<int>(rng() % 20));
    const DyadicScalar b(static_cast<std::int64_t>(rng() % 2000) - 1000, static_cast<int>(rng() % 20));
    CHECK((a + b) - b == a);
    CHECK(a + b == b + a);
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("ordering", "[dyadic]") {
  CHECK(DyadicScalar(1, 2) < DyadicScalar(1, 1));
  CHECK(DyadicScalar(-1, 1) < DyadicScalar(0, 0));
  CHECK(DyadicScalar(3, 2) > DyadicScalar(1, 1));
  CHECK(DyadicScalar(1, 1) <= DyadicScalar(2, 2));
}

TEST_CASE("serialization n/2^e", "[dyadic]") {
  CHECK(DyadicScalar(1, 3).to_string() == "1/2^3");
  CHECK(DyadicScalar(-5, 4).to_string() == "-5/2^4");
  CHECK(DyadicScalar().to_string() == "0/2^0");
  CHECK(parse_dyadic("1/2^3") == DyadicScalar(1, 3));
  CHECK(parse_dyadic("-5/2^4") == DyadicScalar(-5, 4));
  CHECK_THROWS_AS(parse_dyadic("1/3^2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dyadic("7"), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const DyadicScalar a(static_cast<std::int64_t>(rng() % 4000) - 2000, static_cast<int>(rng() % 30));
    CHECK(parse_dyadic(a.to_string()) == a);
  }
}

TEST_CASE("exact decimal expansion", "[dyadic]") {
  CHECK(DyadicScalar(1, 3).to_decimal_string() == "0.125");
  CHECK(DyadicScalar(1, 1).to_decimal_string() == "0.5");
  CHECK(DyadicScalar(-3, 2).to_decimal_string() == "-0.75");
  CHECK(DyadicScalar(5, 0).to_decimal_string() == "5");
  CHECK(DyadicScalar().to_decimal_string() == "0");
  CHECK(DyadicScalar(3, 1).to_decimal_string() == "1.5");
  // High exponent still exact: 1/2^31.
  CHECK(DyadicScalar(1, 31).to_decimal_string() == "0.0000000004656612873077392578125");
}

TEST_CASE("vector operations", "[dyadic]") {
  const DyadicVec2 a{DyadicScalar(1, 1), DyadicScalar(1, 2)};
  const DyadicVec2 b{DyadicScalar(1, 2), DyadicScalar(1, 2)};
  CHECK((a - b).x == DyadicScalar(1, 2));
  CHECK((a - b).y == DyadicScalar());
  CHECK(squared_distance(a, b) == DyadicScalar(1, 4));
  CHECK(kOmega.squared_norm() == DyadicScalar(1, 1));
}
