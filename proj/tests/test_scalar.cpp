#include "doctest.h"
#include "zpdlab/scalar.hpp"

#include <stdexcept>

using zpdlab::Scalar;

TEST_CASE("rationals reduce to lowest terms with positive denominator") {
    CHECK(Scalar::rational(2, 4).str() == "1/2");
    CHECK(Scalar::rational(-3, -6).str() == "1/2");
    CHECK(Scalar::rational(3, -6).str() == "-1/2");
    CHECK(Scalar::rational(0, 7).str() == "0");
    CHECK(Scalar(5).str() == "5");
}

TEST_CASE("gaussian arithmetic") {
    const Scalar i = Scalar::i();
    CHECK((i * i).str() == "-1");
    CHECK((i * i * i * i).is_one());

    const Scalar z = Scalar::gaussian(1, 2, -3, 4);  // 1/2 - 3/4 i
    const Scalar w = Scalar::gaussian(0, 1, 1, 1);   // i
    CHECK((z + w).str() == "1/2+1/4 i");
    CHECK((z * w).str() == "3/4+1/2 i");
    CHECK((z - z).is_zero());
    CHECK((-z).str() == "-1/2+3/4 i");
}

TEST_CASE("conjugate and inverse") {
    const Scalar z = Scalar::gaussian(1, 1, 2, 1);  // 1 + 2i
    CHECK(z.conj().str() == "1-2 i");
    CHECK((z * z.inverse()).is_one());
    CHECK((z.conj() * z).str() == "5");
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("string round trip") {
    const Scalar samples[] = {
        Scalar(0),
        Scalar(1),
        Scalar(-7),
        Scalar::i(),
        Scalar::gaussian(-1, 1, 0, 1),
        Scalar::gaussian(2, 3, -5, 7),
        Scalar::gaussian(0, 1, -1, 2),
    };
    for (const Scalar& s : samples) CHECK(Scalar::parse(s.str()) == s);
}

TEST_CASE("parser accepts flexible forms") {
    CHECK(Scalar::parse("i") == Scalar::i());
    CHECK(Scalar::parse("-i") == -Scalar::i());
    CHECK(Scalar::parse("3i") == Scalar::gaussian(0, 1, 3, 1));
    CHECK(Scalar::parse(" 1/2 + 1/2 i ") == Scalar::gaussian(1, 2, 1, 2));
    CHECK(Scalar::parse("2-i") == Scalar::gaussian(2, 1, -1, 1));
    CHECK(Scalar::parse("-1/3") == Scalar::rational(-1, 3));
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(Scalar::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("1+1"), std::invalid_argument);      // two real parts
    CHECK_THROWS_AS(Scalar::parse("i+i"), std::invalid_argument);      // two imaginary parts
    CHECK_THROWS_AS(Scalar::parse("1 2"), std::invalid_argument);      // trailing junk
    CHECK_THROWS_AS(Scalar::parse("x"), std::invalid_argument);
}
