#include <doctest.h>

#include <layercast/prng.hpp>
#include <layercast/rational.hpp>

using layercast::BigInt;
using layercast::Rational;
using layercast::SplitMix64;

namespace {
Rational q(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }
}  // namespace

TEST_CASE("canonical form") {
    CHECK(q(2, 4) == q(1, 2));
    CHECK(q(-2, 4).num() == BigInt(-1));
    CHECK(q(2, -4).num() == BigInt(-1));
    CHECK(q(2, -4).den() == BigInt(2));
    CHECK(q(0, 7).den() == BigInt(1));
    CHECK(Rational(0).to_fraction_string() == "0/1");
    CHECK(q(6, 3).to_fraction_string() == "2/1");
}

TEST_CASE("arithmetic identities, two routes agree structurally") {
    SplitMix64 rng(11);
    for (int i = 0; i < 500; ++i) {
        long long a = static_cast<long long>(rng.bounded(201)) - 100;
        long long b = 1 + static_cast<long long>(rng.bounded(100));
        long long c = static_cast<long long>(rng.bounded(201)) - 100;
        long long d = 1 + static_cast<long long>(rng.bounded(100));
        Rational x = q(a, b), y = q(c, d);
        // cross-multiplication route vs explicit common denominator route
        Rational common = q(a * d + c * b, b * d);
        CHECK(x + y == common);
        CHECK((x + y) - y == x);
        CHECK(x + y == y + x);
        if (!y.is_zero()) CHECK((x / y) * y == x);
        CHECK((x < y) == (a * d < c * b));
    }
}

TEST_CASE("parsing") {
    CHECK(Rational::parse("1/2") == q(1, 2));
    CHECK(Rational::parse("-3/6") == q(-1, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("0.75") == q(3, 4));
    CHECK(Rational::parse("-0.5") == q(-1, 2));
    CHECK(Rational::parse(".25") == q(1, 4));
    CHECK(Rational::parse("1.000") == Rational(1));
    CHECK_THROWS_AS(Rational::parse("1/0"), layercast::Error);
    CHECK_THROWS_AS(Rational::parse("a"), layercast::Error);
    CHECK_THROWS_AS(Rational::parse("1.2/3"), layercast::Error);
    CHECK_THROWS_AS(Rational::parse("1."), layercast::Error);
}

TEST_CASE("decimal rendering: 12 significant digits, round-half-even") {
    CHECK(Rational(0).to_decimal_string() == "0");
    CHECK(Rational(1).to_decimal_string() == "1.00000000000");
    CHECK(q(3, 2).to_decimal_string() == "1.50000000000");
    CHECK(q(5, 3).to_decimal_string() == "1.66666666667");
    CHECK(q(29, 12).to_decimal_string() == "2.41666666667");
    CHECK(q(1, 8).to_decimal_string() == "0.125000000000");
    CHECK(q(2, 3).to_decimal_string() == "0.666666666667");
    CHECK(q(-2, 3).to_decimal_string() == "-0.666666666667");
    CHECK(q(1, 1000).to_decimal_string() == "0.00100000000000");

    // ties: exactly representable half-way points
    CHECK(Rational(BigInt("200000000001"), BigInt("200000000000")).to_decimal_string() ==
          "1.00000000000");  // ...0005 rounds to even (down)
    CHECK(Rational(BigInt("200000000003"), BigInt("200000000000")).to_decimal_string() ==
          "1.00000000002");  // ...0015 rounds to even (up)

    // rounding that overflows into the next decade
    CHECK(Rational(BigInt("9999999999999"), BigInt("10")).to_decimal_string() ==
          "1000000000000");

    // wide integers keep magnitude with trailing zeros
    CHECK(Rational(BigInt("10000000000000000"), BigInt(3)).to_decimal_string() ==
          "3333333333330000");
    CHECK(q(1, 3).to_decimal_string(3) == "0.333");
    CHECK(q(1000, 1).to_decimal_string(2) == "1000");
}

TEST_CASE("exact double conversion") {
    CHECK(Rational::from_double_exact(0.5) == q(1, 2));
    CHECK(Rational::from_double_exact(0.25) == q(1, 4));
    CHECK(Rational::from_double_exact(-1.5) == q(-3, 2));
    CHECK(Rational::from_double_exact(0.0) == Rational(0));
    CHECK(Rational::from_double_exact(3.0) == Rational(3));
    // 0.1 is not exactly 1/10 in binary64; conversion must capture the true value
    CHECK(Rational::from_double_exact(0.1) != q(1, 10));
    CHECK(Rational::from_double_exact(0.1).to_decimal_string(17) == "0.10000000000000001");
}

TEST_CASE("to_double round trips on representable values") {
    CHECK(q(1, 2).to_double() == 0.5);
    CHECK(q(-3, 4).to_double() == -0.75);
    CHECK(Rational(12345).to_double() == 12345.0);
}
