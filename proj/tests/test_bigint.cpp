#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ckb/bigint.hpp"

using ckb::BigInt;

TEST_CASE("construction and decimal round trip") {
    CHECK(BigInt().to_string() == "0");
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(1234567890123456789LL).to_string() == "1234567890123456789");
    CHECK(BigInt("-00123").to_string() == "-123");
    CHECK(BigInt("340282366920938463463374607431768211456").to_string() ==
          "340282366920938463463374607431768211456");
    CHECK_THROWS_AS(BigInt("12a4"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt(""), std::invalid_argument);
}

TEST_CASE("known large products") {
    // 2^128 by repeated squaring
    BigInt two(2);
    BigInt p = two;
    for (int i = 0; i < 7; ++i) p = p * p;
    CHECK(p.to_string() == "340282366920938463463374607431768211456");

    BigInt a("123456789012345678901234567890");
    BigInt b("987654321098765432109876543210");
    CHECK((a * b).to_string() ==
          "121932631137021795226185032733622923332237463801111263526900");
}

TEST_CASE("arithmetic agrees with 64-bit integers on small values") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
    for (int i = 0; i < 2000; ++i) {
        long long a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_string() == std::to_string(a + b));
        CHECK((BigInt(a) - BigInt(b)).to_string() == std::to_string(a - b));
        CHECK((BigInt(a) * BigInt(b)).to_string() == std::to_string(a * b));
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
        CHECK((BigInt(a) == BigInt(b)) == (a == b));
    }
}

TEST_CASE("signed edge cases") {
    CHECK((BigInt(5) - BigInt(5)).is_zero());
    CHECK((BigInt(-5) + BigInt(5)).is_zero());
    CHECK((-BigInt(0)).to_string() == "0");
    CHECK(BigInt(-3) * BigInt(-4) == BigInt(12));
    CHECK(BigInt(-3) * BigInt(4) == BigInt(-12));
    CHECK(BigInt(-2) < BigInt(1));
    CHECK(BigInt(-2) > BigInt(-3));
}

TEST_CASE("to_double") {
    CHECK(BigInt(0).to_double() == 0.0);
    CHECK(BigInt(-12345).to_double() == -12345.0);
    CHECK(BigInt("1125899906842624").to_double() == 1125899906842624.0);  // 2^50
}
