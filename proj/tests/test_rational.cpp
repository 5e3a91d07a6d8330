#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"

using namespace ncheeger;

TEST_CASE("parsing integers, fractions and decimals") {
    CHECK(parse_rational("1") == Rational(1));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("+7") == Rational(7));
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("0.5") == Rational(1, 2));
    CHECK(parse_rational("1.25") == Rational(5, 4));
    CHECK(parse_rational("-0.1") == Rational(-1, 10));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("3.") == Rational(3));
    CHECK(parse_rational("0") == Rational(0));
}

TEST_CASE("parse failures") {
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("a"), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1/ 2"), Error);
    CHECK_THROWS_AS(parse_rational("1.2.3"), Error);
    CHECK_THROWS_AS(parse_rational("1e3"), Error);
    CHECK_THROWS_AS(parse_rational("."), Error);
    CHECK_THROWS_AS(parse_rational("--1"), Error);
}

TEST_CASE("rendering lowest terms") {
    CHECK(render_rational(Rational(1)) == "1");
    CHECK(render_rational(Rational(1, 2)) == "1/2");
    CHECK(render_rational(Rational(4, 2)) == "2");
    CHECK(render_rational(Rational(-10, 4)) == "-5/2");
    CHECK(render_rational(Rational(0)) == "0");
}

TEST_CASE("values are stored normalized") {
    const Rational q = parse_rational("6/4");
    CHECK(numerator(q) == 3);
    CHECK(denominator(q) == 2);
    const Rational neg = parse_rational("-3/6");
    CHECK(denominator(neg) > 0);
    CHECK(neg == Rational(-1, 2));
}

TEST_CASE("parse-render round trip on random rationals") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t num = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
        const std::int64_t den = static_cast<std::int64_t>(rng() % 999983) + 1;
        const Rational q(num, den);
        CHECK(parse_rational(render_rational(q)) == q);
    }
    // far beyond 64-bit range
    Rational big(BigInt("123456789012345678901234567890123456789"),
                 BigInt("98765432109876543210987654321"));
    CHECK(parse_rational(render_rational(big)) == big);
}

TEST_CASE("double conversion") {
    CHECK(to_double(Rational(1, 2)) == 0.5);
    CHECK(to_double(Rational(-3, 4)) == -0.75);
    CHECK(to_double(Rational(1, 3)) == Catch::Approx(1.0 / 3.0).epsilon(1e-15));
}
