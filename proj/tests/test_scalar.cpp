#include "credal/errors.hpp"
#include "credal/scalar.hpp"
#include "support.hpp"

#include <doctest.h>

using credal::ParseError;
using credal::Scalar;
using credal::test::q;

TEST_CASE("scalar parses integers, decimals and fractions exactly") {
    CHECK(Scalar::parse("0.28") == q(7, 25));
    CHECK(Scalar::parse("47/20") == q(47, 20));
    CHECK(Scalar::parse("-0.7") == q(-7, 10));
    CHECK(Scalar::parse("-3/10") == q(-3, 10));
    CHECK(Scalar::parse("+12") == q(12));
    CHECK(Scalar::parse(".5") == q(1, 2));
    CHECK(Scalar::parse("3.") == q(3));
    CHECK(Scalar::parse("4/8") == q(1, 2));
    CHECK(Scalar::parse("123456789012345678901234567890") * q(10) ==
          Scalar::parse("1234567890123456789012345678900"));
}

TEST_CASE("scalar rejects anything that is not exact") {
    for (const char* bad : {"", "-", "abc", "1e3", "1/0", "1.2.3", "1/-2", " 1", "0x10", ".", "inf", "nan"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Scalar::parse(bad), ParseError);
    }
}

TEST_CASE("scalar is kept in lowest terms") {
    CHECK(q(2, 4).to_string() == "1/2");
    CHECK(q(-6, -4).to_string() == "3/2");
    CHECK(q(3, -6).to_string() == "-1/2");
    CHECK(q(0, 7).to_string() == "0");
    CHECK(Scalar().to_string() == "0");
    CHECK_THROWS_AS(q(1, 0), credal::ModelError);
    CHECK_THROWS_AS(q(1) / q(0), credal::ModelError);
}

TEST_CASE("decimal rendering") {
    CHECK(q(57, 25).to_decimal() == "2.28");
    CHECK(q(-7, 10).to_decimal() == "-0.7");
    CHECK(q(1, 40).to_decimal() == "0.025");
    CHECK(q(-1, 50).to_decimal() == "-0.02");
    CHECK(q(5).to_decimal() == "5");
    CHECK(q(0).to_decimal() == "0");
    CHECK_FALSE(q(1, 3).to_decimal().has_value());
    CHECK_FALSE(q(7, 30).to_decimal().has_value());
}

TEST_CASE("scalar field identities on random values") {
    credal::test::Generator gen(11);
    for (int i = 0; i < 500; ++i) {
        Scalar a = gen.value(), b = gen.value(), c = gen.value();
        CHECK((a + b) - b == a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK(a * b / b == a);
        CHECK(-(-a) == a);
        CHECK(((a < b) + (a == b) + (a > b)) == 1);
        if (auto d = a.to_decimal()) CHECK(Scalar::parse(*d) == a);
        CHECK(Scalar::parse(a.to_string()) == a);
    }
}
