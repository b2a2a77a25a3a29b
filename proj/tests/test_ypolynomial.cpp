#include <doctest.h>

#include <random>

#include "genus/ypolynomial.hpp"

using genus::Rational;
using genus::YPolynomial;

TEST_CASE("construction trims trailing zeros") {
    CHECK(YPolynomial{1, 2, 0, 0}.degree() == 1);
    CHECK(YPolynomial{0, 0}.is_zero());
    CHECK(YPolynomial().degree() == -1);
    CHECK(YPolynomial::monomial(3, Rational(2)).coeff(3) == Rational(2));
    CHECK(YPolynomial{1, 2}.coeff(7) == Rational(0));
}

TEST_CASE("arithmetic") {
    const YPolynomial p{1, 1};
    CHECK(p * p == YPolynomial{1, 2, 1});
    CHECK(p.pow(3) == YPolynomial{1, 3, 3, 1});
    CHECK(p - p == YPolynomial());
    CHECK(-p == YPolynomial{-1, -1});
    CHECK(p * Rational(1, 2) == YPolynomial{Rational(1, 2), Rational(1, 2)});
    CHECK(YPolynomial{1, -1, 1}.evaluate(Rational(2)) == Rational(3));
    CHECK(YPolynomial{1, 2, 3}.derivative() == YPolynomial{2, 6});
    CHECK(YPolynomial{1, 2, 3}.negated_variable() == YPolynomial{1, -2, 3});
}

TEST_CASE("str") {
    CHECK(YPolynomial{1, -1, 1}.str() == "1 - y + y^2");
    CHECK(YPolynomial().str() == "0");
    CHECK(YPolynomial{0, Rational(1, 2)}.str() == "1/2*y");
}

TEST_CASE("shifted agrees with evaluation at shifted points") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> c;
        for (int k = 0; k < 6; ++k) c.emplace_back(coeff(rng));
        const YPolynomial p(c);
        const Rational s(coeff(rng), 3);
        const YPolynomial q = p.shifted(s);
        for (long y = -3; y <= 3; ++y) CHECK(q.evaluate(Rational(y)) == p.evaluate(Rational(y) + s));
        CHECK(q.shifted(-s) == p);
    }
}

TEST_CASE("shift by -1 expands in powers of (y + 1)") {
    // y^2 = (z - 1)^2 = 1 - 2z + z^2 with z = y + 1
    CHECK(YPolynomial{0, 0, 1}.shifted(Rational(-1)) == YPolynomial{1, -2, 1});
}
