#include "opgraph/scalar.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace opgraph;

TEST_CASE("basic field operations") {
    GaussRational i = GaussRational::i();
    CHECK(i * i == GaussRational(-1));
    CHECK(GaussRational(Rational(1, 2)) + GaussRational(Rational(1, 3)) ==
          GaussRational(Rational(5, 6)));
    CHECK((GaussRational(1) + i) * (GaussRational(1) - i) == GaussRational(2));
    CHECK_THROWS_AS(GaussRational(0).inverse(), std::domain_error);
}

TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(20260809);
    for (int trial = 0; trial < 200; ++trial) {
        GaussRational a = testsupport::random_gauss(rng);
        GaussRational b = testsupport::random_gauss(rng);
        GaussRational c = testsupport::random_gauss(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        if (!a.is_zero()) CHECK(a * a.inverse() == GaussRational(1));
    }
}

TEST_CASE("pow with negative exponents") {
    GaussRational theta(2);
    CHECK(pow(theta, -1) == GaussRational(Rational(1, 2)));
    CHECK(pow(theta, 3) == GaussRational(8));
    CHECK(pow(GaussRational::i(), 4) == GaussRational(1));
    CHECK(pow(GaussRational(1) + GaussRational::i(), -1) ==
          GaussRational(Rational(1, 2), Rational(-1, 2)));
}

TEST_CASE("scalar text format") {
    CHECK(parse_scalar("1/2") == GaussRational(Rational(1, 2)));
    CHECK(parse_scalar("-3") == GaussRational(-3));
    CHECK(parse_scalar("i") == GaussRational::i());
    CHECK(parse_scalar("-i") == -GaussRational::i());
    CHECK(parse_scalar("1+1*i") == GaussRational(Rational(1), Rational(1)));
    CHECK(parse_scalar("1+i") == GaussRational(Rational(1), Rational(1)));
    CHECK(parse_scalar("1/2-3/4*i") == GaussRational(Rational(1, 2), Rational(-3, 4)));
    CHECK(parse_scalar("5/3") == GaussRational(Rational(5, 3)));
    CHECK(parse_scalar(" 2 * i ") == GaussRational(Rational(0), Rational(2)));
    CHECK(parse_scalar("+3") == GaussRational(3));
    CHECK(parse_rational("+1/2") == Rational(1, 2));

    CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("1//2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("1+2+3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
}

TEST_CASE("text round trip on random values") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        GaussRational a = testsupport::random_gauss(rng, 20, 9);
        CHECK(parse_scalar(a.to_string()) == a);
    }
    CHECK(GaussRational(0).to_string() == "0");
    CHECK(GaussRational::i().to_string() == "i");
    CHECK((-GaussRational::i()).to_string() == "-i");
    CHECK(GaussRational(Rational(1), Rational(1)).to_string() == "1+i");
    CHECK(GaussRational(Rational(1, 2), Rational(-3, 4)).to_string() == "1/2-3/4*i");
}
