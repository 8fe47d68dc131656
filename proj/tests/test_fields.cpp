#include <catch2/catch_amalgamated.hpp>

#include <critloci/fields.hpp>

using critloci::PrimeField;
using critloci::Rational;

TEST_CASE("rationals stay reduced with positive denominators") {
    Rational q(6, -4);
    CHECK(q.str() == "-3/2");
    CHECK(q.numerator() == -3);
    CHECK(q.denominator() == 2);
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(0, 7) == Rational::zero());
}

TEST_CASE("rational field arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK((-a).str() == "-1/3");
    CHECK(a.inverse() == Rational(3));
    CHECK_THROWS_AS(a / Rational::zero(), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parsing round trips") {
    for (const char* s : {"0", "-7", "3/8", "-22/7", "1000000000000000000000/3"}) {
        Rational q = Rational::from_string(s);
        CHECK(q.str() == s);
    }
    CHECK(Rational::from_string("4/2").str() == "2");
    CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
}

TEST_CASE("prime field arithmetic modulo 32003") {
    REQUIRE(PrimeField::modulus() == 32003);
    PrimeField a(32000), b(7);
    CHECK((a + b).value() == 4);
    CHECK((a - b).value() == 31993);
    CHECK((a * b) == PrimeField(32000 * 7));
    CHECK(PrimeField(-1).value() == 32002);
    PrimeField inv = b.inverse();
    CHECK((b * inv).is_one());
    CHECK_THROWS_AS(PrimeField::zero().inverse(), std::domain_error);
}

TEST_CASE("prime field parses fractions by inverting the denominator") {
    PrimeField q = PrimeField::from_string("3/4");
    CHECK(q * PrimeField(4) == PrimeField(3));
    CHECK(PrimeField::from_string("-5") == PrimeField(-5));
}
