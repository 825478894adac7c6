#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coxsurf/cyclotomic.hpp"
#include "coxsurf/rational.hpp"

using namespace coxsurf;

TEST_CASE("rational basics") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(3, -2).denominator() == 2);
    CHECK(Rational(3, -2).numerator() == -3);
    CHECK(Rational::parse("-7/3").str() == "-7/3");
    CHECK(Rational::parse("42").str() == "42");
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("rational field axioms on random values") {
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<long> d(-40, 40), dn(1, 17);
    for (int i = 0; i < 200; ++i) {
        Rational x(d(rng), dn(rng)), y(d(rng), dn(rng)), z(d(rng), dn(rng));
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x * x.inverse() == Rational(1));
    }
}

TEST_CASE("cyclotomic arithmetic") {
    Cyclotomic3 e = Cyclotomic3::epsilon();
    // e^2 = -1 - e
    CHECK(e * e == Cyclotomic3(Rational(-1), Rational(-1)));
    // e^3 = 1
    CHECK(e * e * e == Cyclotomic3::one());
    // (1+e)(1+e^2) = 1
    Cyclotomic3 one_plus_e = Cyclotomic3::one() + e;
    Cyclotomic3 one_plus_e2 = Cyclotomic3::one() + e * e;
    CHECK(one_plus_e * one_plus_e2 == Cyclotomic3::one());
    CHECK((Cyclotomic3(Rational(3, 2)) + e).str() == "3/2+e");
    CHECK_THROWS_AS(Cyclotomic3::zero().inverse(), DivisionByZero);
}

TEST_CASE("cyclotomic norm and inverses") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int i = 0; i < 200; ++i) {
        Cyclotomic3 x(Rational(d(rng)), Rational(d(rng)));
        CHECK((x.norm().is_zero()) == x.is_zero());
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == Cyclotomic3::one());
        }
        Cyclotomic3 y(Rational(d(rng)), Rational(d(rng)));
        Cyclotomic3 z(Rational(d(rng)), Rational(d(rng)));
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
    }
}
