// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <random>

#include "doctest.h"

#include "triad/rational.hpp"

using triad::Rational;
using triad::affine_third;
using triad::midpoint;

TEST_SUITE("rational")
{
    TEST_CASE("construction normalizes")
    {
        CHECK(Rational(6, 18) == Rational(1, 3));
        CHECK(Rational(6, 18).numerator() == 1);
        CHECK(Rational(6, 18).denominator() == 3);

        const Rational negative(2, -3);
        CHECK(negative.numerator() == -2);
        CHECK(negative.denominator() == 3);

        CHECK(Rational(0, 7) == Rational(0));
        CHECK(Rational(0, 7).denominator() == 1);

        CHECK_THROWS_AS(Rational(1, 0), triad::DomainError);
    }

    TEST_CASE("arithmetic")
    {
        CHECK(Rational(1, 3) + Rational(1, 3) == Rational(2, 3));
        CHECK(Rational(2, 3) - Rational(1, 3) == Rational(1, 3));
        CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
        CHECK(Rational(5, 9) > Rational(4, 9));
        CHECK(Rational(-1, 2) < Rational(1, 3));
        CHECK(-Rational(1, 2) == Rational(-1, 2));
        CHECK(triad::abs(Rational(-5, 7)) == Rational(5, 7));
    }

    TEST_CASE("affine_third")
    {
        CHECK(affine_third(Rational(0), Rational(1), 2) == Rational(2, 3));
        CHECK(affine_third(Rational(2, 3), Rational(1, 3), 2) == Rational(4, 9));
        CHECK(affine_third(Rational(5, 7), Rational(5, 7), 1) == Rational(5, 7));
        CHECK(affine_third(Rational(5, 7), Rational(5, 7), 2) == Rational(5, 7));
        CHECK_THROWS_AS(affine_third(Rational(0), Rational(1), 0), triad::DomainError);
        CHECK_THROWS_AS(affine_third(Rational(0), Rational(1), 3), triad::DomainError);
    }

    TEST_CASE("midpoint")
    {
        CHECK(midpoint(Rational(0), Rational(1)) == Rational(1, 2));
        CHECK(midpoint(Rational(1, 3), Rational(2, 3)) == Rational(1, 2));
        CHECK(midpoint(Rational(1, 3), Rational(1, 3)) == Rational(1, 3));
    }

    TEST_CASE("value equality is path independent")
    {
        // 2/3 reached along three different exact routes.
        const Rational via_split = affine_third(Rational(0), Rational(1), 2);
        const Rational via_reverse = affine_third(Rational(1), Rational(0), 1);
        const Rational via_mid = midpoint(Rational(1, 3), Rational(1));
        CHECK(via_split == via_reverse);
        CHECK(via_reverse == via_mid);
        CHECK(via_mid == Rational::parse("2/3"));
        CHECK(std::hash<Rational>{}(via_split) == std::hash<Rational>{}(via_mid));
    }

    TEST_CASE("to_double")
    {
        CHECK(Rational(1, 3).to_double() == 1.0 / 3.0);
        CHECK(Rational(2, 3).to_double() == 2.0 / 3.0);
        CHECK(Rational(-1, 2).to_double() == -0.5);
    }

    TEST_CASE("str and parse")
    {
        CHECK(Rational(2, 3).str() == "2/3");
        CHECK(Rational(-1, 2).str() == "-1/2");
        CHECK(Rational(0).str() == "0/1");
        CHECK(Rational::parse("6/18") == Rational(1, 3));
        CHECK(Rational::parse("-4/6") == Rational(-2, 3));
        CHECK(Rational::parse("4") == Rational(4));
        CHECK(Rational::parse(Rational(7, 12).str()) == Rational(7, 12));

        CHECK_THROWS_AS(Rational::parse(""), triad::FormatError);
        CHECK_THROWS_AS(Rational::parse("x"), triad::FormatError);
        CHECK_THROWS_AS(Rational::parse("1.5"), triad::FormatError);
        CHECK_THROWS_AS(Rational::parse("1/2/3"), triad::FormatError);
        CHECK_THROWS_AS(Rational::parse("1/0"), triad::DomainError);
    }

    TEST_CASE("closure under trisection and halving denominators")
    {
        // Sums, differences and products of values with 2^p * 3^q
        // denominators keep that denominator shape.
        std::mt19937 rng(2024);
        std::vector<Rational> pool = {Rational(0), Rational(1)};
        for (int i = 0; i < 300; ++i) {
            const Rational& a = pool[rng() % pool.size()];
            const Rational& b = pool[rng() % pool.size()];
            Rational next;
            switch (rng() % 5) {
            case 0:
                next = affine_third(a, b, 1 + static_cast<int>(rng() % 2));
                break;
            case 1:
                next = midpoint(a, b);
                break;
            case 2:
                next = a + b;
                break;
            case 3:
                next = a - b;
                break;
            default:
                next = a * b;
                break;
            }
            std::int64_t den = next.denominator();
            while (den % 2 == 0) {
                den /= 2;
            }
            while (den % 3 == 0) {
                den /= 3;
            }
            REQUIRE(den == 1);
            if (pool.size() < 64) {
                pool.push_back(next);
            } else {
                pool[rng() % pool.size()] = next;
            }
        }
    }

    TEST_CASE("deep trisection is exact until it overflows loudly")
    {
        Rational x(1);
        std::int64_t expected_den = 1;
        for (int depth = 1; depth <= 39; ++depth) {
            x = affine_third(Rational(0), x, 1); // x/3
            expected_den *= 3;
            REQUIRE(x.numerator() == 1);
            REQUIRE(x.denominator() == expected_den);
        }
        // Depth 40 needs 3^40 > 2^63 - 1: the overflow must be an error,
        // never a wraparound.
        CHECK_THROWS_AS(affine_third(Rational(0), x, 1), triad::OverflowError);
    }

    TEST_CASE("multiplication overflow is detected")
    {
        const Rational tiny(1, 4'000'000'000LL);
        CHECK_THROWS_AS(tiny * tiny, triad::OverflowError);
        const Rational huge(4'000'000'000LL, 1);
        CHECK_THROWS_AS(huge * huge, triad::OverflowError);
    }
}
