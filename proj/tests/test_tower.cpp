#include <doctest.h>

#include <cmath>

#include "cubedist/error.hpp"
#include "cubedist/tower.hpp"

using namespace cubedist;

TEST_SUITE("tower") {
  TEST_CASE("small powers are exact") {
    TowerInt t = TowerInt::pow(9, 5);
    REQUIRE(t.is_exact());
    CHECK(t.exact() == 59049);
    CHECK(t.str() == "59049");
    CHECK(t.height() == 1);  // the exponential structure is kept alongside the value
  }

  TEST_CASE("9^(9^9) stays symbolic and compares correctly") {
    TowerInt e = TowerInt::pow(9, 9);
    TowerInt t = TowerInt::pow(9, e);
    CHECK(t.symbolic());
    CHECK_FALSE(t.is_exact());
    CHECK_THROWS_AS(t.exact(), Error);
    CHECK(t.height() == 2);
    CHECK(t.str() == "9^{387420489}");
    CHECK(TowerInt(5).height() == 0);
    CHECK(TowerInt::parse(t.str()) == t);
    CHECK(TowerInt::pow(9, e + 1) > t);
    CHECK(t.times(9) == TowerInt::pow(9, e + 1));
    CHECK(t + 5 > t);
    BigInt big = 1;
    for (int i = 0; i < 100; ++i) big *= 1000000007;
    CHECK(TowerInt(big) < t);
  }

  TEST_CASE("iterated logs of towers") {
    TowerInt t = TowerInt::pow(9, TowerInt::pow(9, 9));
    // ln(9^(9^9)) = 9^9 ln 9
    CHECK(t.iterated_log(1) == doctest::Approx(387420489.0 * std::log(9.0)).epsilon(1e-9));
    CHECK(t.iterated_log(2) == doctest::Approx(std::log(387420489.0 * std::log(9.0))).epsilon(1e-9));
    CHECK(TowerInt(100).iterated_log(0) == doctest::Approx(100.0));
    CHECK(big_log(BigInt(1) << 2000) == doctest::Approx(2000 * std::log(2.0)).epsilon(1e-9));
    CHECK(exp_iter(2, 0.0) == doctest::Approx(std::exp(1.0)));
  }

  TEST_CASE("parse exact and symbolic text") {
    CHECK(TowerInt::parse("12345").exact() == 12345);
    TowerInt t = TowerInt::parse("9^{9^{9^{9}}}+3");
    CHECK(t.height() >= 1);
    CHECK(t.addend() == 3);
    CHECK_THROWS_AS(TowerInt::parse("9^{"), Error);
  }
}
