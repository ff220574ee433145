#include <doctest.h>

#include <cstdint>
#include <random>
#include <string>

#include "madhava/enclosure.hpp"
#include "madhava/rational.hpp"

using namespace madhava;

namespace {

// Independent oracles on machine integers.
std::uint64_t euclid(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        const std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Schoolbook long division of num/den (both positive) to `scale` digits, truncated.
std::string long_division(std::uint64_t num, std::uint64_t den, unsigned scale) {
    std::string out = std::to_string(num / den);
    std::uint64_t rem = num % den;
    if (scale > 0) out.push_back('.');
    for (unsigned i = 0; i < scale; ++i) {
        rem *= 10;
        out.push_back(static_cast<char>('0' + rem / den));
        rem %= den;
    }
    return out;
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    return rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rat reduces and normalizes sign") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(2, 4).str() == "1/2");
    CHECK(rat(3, -6).str() == "-1/2");
    CHECK(rat(3, -6).denominator() > 0);
    CHECK(rat(0, -7).str() == "0");
    CHECK(rat(0, -7).denominator() == 1);
}

TEST_CASE("rat of the historical circumference ratio") {
    const std::uint64_t g = euclid(62832, 20000);
    CHECK(g == 16);
    const Rational r = rat(62832, 20000);
    CHECK(r.numerator() == static_cast<unsigned long>(62832 / g));
    CHECK(r.denominator() == static_cast<unsigned long>(20000 / g));
    CHECK(r.str() == "3927/1250");
}

TEST_CASE("zero denominators are rejected") {
    CHECK_THROWS_AS(rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("to_decimal") {
    CHECK(to_decimal(rat(1, 3), 4).digits == "0.3333");
    CHECK(to_decimal(Rational(0), 3, Rounding::half_even).digits == "0.000");
    CHECK(to_decimal(rat(-1, 3), 2).digits == "-0.33");
    CHECK(to_decimal(rat(-1, 3000), 2).digits == "0.00");
    CHECK(to_decimal(rat(7, 2), 0).digits == "3");
    CHECK(to_decimal(rat(7, 2), 0, Rounding::half_even).digits == "4");
    CHECK(to_decimal(rat(5, 2), 0, Rounding::half_even).digits == "2");
    CHECK(to_decimal(rat(2, 3), 3, Rounding::half_even).digits == "0.667");

    const std::string expected = long_division(2827433388233ULL, 900000000000ULL, 13);
    CHECK(expected == "3.1415926535922");
    CHECK(to_decimal(rat(Integer("2827433388233"), Integer("900000000000")), 13).digits == expected);

    CHECK_THROWS_AS(to_decimal(rat(1, 3), kMaxDecimalScale + 1), std::invalid_argument);
    CHECK(to_decimal(rat(1, 7), 60).digits.size() == 62);
}

TEST_CASE("to_decimal agrees with long division on random fractions") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> num(0, 1000000000), den(1, 1000000);
    for (int i = 0; i < 500; ++i) {
        const auto n = num(rng), d = den(rng);
        CHECK(to_decimal(rat(static_cast<long long>(n), static_cast<long long>(d)), 12).digits ==
              long_division(n, d, 12));
    }
}

TEST_CASE("parse_decimal") {
    CHECK(parse_decimal("3.25") == rat(13, 4));
    CHECK(parse_decimal("-0.5") == rat(-1, 2));
    CHECK(parse_decimal("42") == Rational(42));
    CHECK_THROWS_AS(parse_decimal("3.1.4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_decimal(""), std::invalid_argument);
}

TEST_CASE("to_scientific_upper never understates") {
    CHECK(to_scientific_upper(rat(1, 3)) == "3.34e-1");
    CHECK(to_scientific_upper(Rational(1)) == "1.00e0");
    CHECK(to_scientific_upper(rat(9999, 10000)) == "1.00e0");
    CHECK(to_scientific_upper(Rational(0)) == "0");
    CHECK(to_scientific_upper(rat(-243, 100000)) == "2.43e-3");
}

TEST_CASE("field laws hold exactly on random rationals") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 300; ++i) {
        const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("to_decimal is monotone and round-trips within one unit of the last place") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        Rational x = random_rational(rng), y = random_rational(rng);
        if (y < x) std::swap(x, y);
        for (Rounding mode : {Rounding::toward_zero, Rounding::half_even}) {
            for (unsigned scale : {0u, 3u, 9u}) {
                const auto rx = to_decimal(x, scale, mode);
                CHECK(rx.value() <= to_decimal(y, scale, mode).value());
                CHECK(abs(rx.value() - x) < pow10(-static_cast<long>(scale)));
            }
        }
    }
}

TEST_CASE("enclosure width and validation") {
    CHECK(enclosure_width(Enclosure(rat(1, 4), rat(1, 3))) == rat(1, 12));
    CHECK(enclosure_width(Enclosure::point(rat(5, 7))) == Rational(0));
    CHECK(enclosure_width(Enclosure(rat(333, 106), rat(355, 113))) == rat(355 * 106 - 333 * 113, 113 * 106));
    CHECK_THROWS_AS(Enclosure(Rational(1), Rational(0)), std::invalid_argument);
}

TEST_CASE("enclosure arithmetic") {
    const Enclosure e(rat(-1, 2), rat(1, 3));
    CHECK(abs(e) == Enclosure(Rational(0), rat(1, 2)));
    CHECK(abs(Enclosure(Rational(-3), Rational(-1))) == Enclosure(Rational(1), Rational(3)));
    CHECK((Rational(-2) * e) == Enclosure(rat(-2, 3), Rational(1)));
    CHECK((Rational(1) - e) == Enclosure(rat(2, 3), rat(3, 2)));
    CHECK_THROWS_AS(Rational(1) / e, std::domain_error);
    CHECK((Rational(1) / Enclosure(Rational(2), Rational(4))) == Enclosure(rat(1, 4), rat(1, 2)));
    CHECK(intersect(Enclosure(Rational(0), Rational(2)), Enclosure(Rational(1), Rational(3))) ==
          Enclosure(Rational(1), Rational(2)));
    CHECK_FALSE(intersect(Enclosure(Rational(0), Rational(1)), Enclosure(Rational(2), Rational(3))).has_value());
    CHECK(max_distance(Rational(1), Enclosure(Rational(0), Rational(3))) == Rational(2));
}
